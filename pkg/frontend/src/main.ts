import { ApiClient } from "./api";
import {
  renderGame,
  renderPractice,
  renderProgress,
  renderSetup,
  renderSummary,
  renderWelcome,
} from "./screens";
import { GameStore } from "./store";
import { el } from "./ui";

function renderScreen(store: GameStore): HTMLElement {
  switch (store.screen.name) {
    case "welcome":
      return renderWelcome(store);
    case "setup":
      return renderSetup(store, store.screen.questions);
    case "practice":
      return renderPractice(store);
    case "game":
      return renderGame(store);
    case "summary":
      return renderSummary(store);
    case "progress":
      return renderProgress(store);
  }
}

function renderToasts(store: GameStore): HTMLElement {
  return el(
    "div",
    { id: "toasts", "aria-live": "polite" },
    ...store.toasts.slice(-6).map((toast) =>
      el("div", { class: `toast toast-${toast.kind}`, "data-kind": toast.kind }, toast.text),
    ),
  );
}

export function createApp(root: HTMLElement, apiBase = ""): GameStore {
  const store = new GameStore(new ApiClient(apiBase));
  const redraw = () => {
    root.replaceChildren(renderScreen(store), renderToasts(store));
  };
  store.subscribe(redraw);
  redraw();
  return store;
}

const mount = typeof document !== "undefined" ? document.getElementById("app") : null;
if (mount) {
  createApp(mount);
}
