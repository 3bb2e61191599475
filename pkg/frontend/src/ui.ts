// Tiny DOM helpers; no framework, the whole app re-renders from the store.

export function el<K extends keyof HTMLElementTagNameMap>(
  tag: K,
  attrs: Record<string, string | boolean | null | undefined> = {},
  ...children: (Node | string | null)[]
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  for (const [key, value] of Object.entries(attrs)) {
    if (value === null || value === undefined || value === false) continue;
    if (key === "text") {
      node.textContent = String(value);
    } else if (value === true) {
      node.setAttribute(key, "");
    } else {
      node.setAttribute(key, value);
    }
  }
  for (const child of children) {
    if (child === null) continue;
    node.append(child);
  }
  return node;
}

export function button(
  label: string,
  onClick: () => void,
  attrs: Record<string, string | boolean | null | undefined> = {},
): HTMLButtonElement {
  const node = el("button", attrs, label);
  node.addEventListener("click", onClick);
  return node;
}
