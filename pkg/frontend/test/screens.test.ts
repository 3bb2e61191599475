import { describe, expect, it } from "vitest";

import { ApiClient } from "../src/api";
import type { ChallengeView, MonthProgress } from "../src/api";
import { renderGame, renderProgress } from "../src/screens";
import { GameStore } from "../src/store";

function storeWithView(view: ChallengeView, points: number): GameStore {
  const store = new GameStore(new ApiClient("http://stub"));
  store.view = view;
  store.points = points;
  store.screen = { name: "game" };
  return store;
}

const recallView: ChallengeView = {
  position: 8,
  total: 13,
  kind: "recall",
  images: ["assets/q-pet/1.svg", "assets/q-pet/2.svg", "assets/q-pet/3.svg", "assets/q-pet/4.svg"],
  prompt: "What was the name of your first pet?",
  bank: Array.from({ length: 12 }, (_, i) => ({
    letter: "ABCDEFGHIJKL"[i]!,
    consumed: false,
  })),
  revealed: [],
  cues_shown: [],
};

describe("game screen", () => {
  it("disables hint buttons below 50 points with a balance tooltip", () => {
    const node = renderGame(storeWithView(recallView, 30));
    const reveal = node.querySelector<HTMLButtonElement>('[data-testid="buy-reveal"]')!;
    expect(reveal.disabled).toBe(true);
    expect(reveal.title).toContain("need 50 points");
    expect(reveal.title).toContain("30");
  });

  it("enables hint buttons at 50 points", () => {
    const node = renderGame(storeWithView(recallView, 50));
    const reveal = node.querySelector<HTMLButtonElement>('[data-testid="buy-reveal"]')!;
    expect(reveal.disabled).toBe(false);
    expect(reveal.title).toContain("costs 50 points");
  });

  it("never renders the answer length for recall challenges", () => {
    const node = renderGame(storeWithView(recallView, 0));
    expect(node.outerHTML).not.toContain("answer_letter_count");
    expect(node.querySelectorAll('[data-testid="tile"]').length).toBe(12);
  });

  it("shows recognition options as buttons", () => {
    const view: ChallengeView = {
      ...recallView,
      kind: "recognition",
      options: ["PENGUIN", "MARBLE", "LANTERN", "COMPASS"],
      bank: undefined,
    };
    const node = renderGame(storeWithView(view, 0));
    const labels = [...node.querySelectorAll('[data-testid="option"]')].map(
      (option) => option.textContent,
    );
    expect(labels).toEqual(["PENGUIN", "MARBLE", "LANTERN", "COMPASS"]);
  });
});

describe("progress screen", () => {
  it("renders the rate the service reported without recomputing it", () => {
    // a rate that deliberately disagrees with solved/attempted: the view
    // must trust the service's field, not divide the counts itself
    const series: MonthProgress[] = [
      { month: "2026-05", attempted: 4, solved: 2, rate: 0.42 },
    ];
    const store = new GameStore(new ApiClient("http://stub"));
    store.screen = { name: "progress", series };
    const node = renderProgress(store);
    const bar = node.querySelector<HTMLElement>('[data-testid="month-bar"]')!;
    expect(bar.dataset["rate"]).toBe("0.42");
    expect(bar.style.width).toBe("42%");
    expect(node.querySelector('[data-testid="month-text"]')!.textContent).toContain("42%");
    expect(node.querySelector('[data-testid="month-text"]')!.textContent).not.toContain("50%");
  });

  it("shows an empty note when no security challenges were attempted", () => {
    const store = new GameStore(new ApiClient("http://stub"));
    store.screen = { name: "progress", series: [] };
    const node = renderProgress(store);
    expect(node.textContent).toContain("No security challenges attempted yet");
  });
});
