// Scripted full playthrough against the real game service (spawned by
// global-setup): set up a 3-question profile, play the practice round, clear
// all 13 challenges perfectly, watch the badge toasts, and land on the
// summary and progress screens.

import { describe, expect, it } from "vitest";

import { createApp } from "../src/main";
import type { GameStore } from "../src/store";

const ANSWERS: Record<string, string> = {
  "q-pet": "PENGUIN",
  "q-street": "BICYCLE",
  "q-teacher": "VIOLIN",
};

async function until<T>(probe: () => T | null | undefined | false, what = "condition"): Promise<T> {
  const deadline = Date.now() + 20_000;
  for (;;) {
    const value = probe();
    if (value) return value;
    if (Date.now() > deadline) throw new Error(`timed out waiting for ${what}`);
    await new Promise((resolve) => setTimeout(resolve, 20));
  }
}

function click(node: Element | null | undefined) {
  if (!node) throw new Error("tried to click a missing element");
  (node as HTMLElement).click();
}

function query<T extends Element>(root: HTMLElement, selector: string): T | null {
  return root.querySelector<T>(selector);
}

describe("full play flow", () => {
  it("completes setup, practice, 13 challenges, badges, summary and progress", async () => {
    const root = document.createElement("div");
    document.body.append(root);
    // the happy-dom document origin is the live service, so relative fetches
    // hit the real API exactly like the deployed client behind its proxy
    const store: GameStore = createApp(root, "");

    // -- welcome -> setup --------------------------------------------------
    const name = await until(
      () => query<HTMLInputElement>(root, '[data-testid="player-name"]'),
      "welcome screen",
    );
    name.value = "E2E Runner";
    click(query(root, '[data-testid="begin"]'));

    await until(() => query(root, '[data-testid="save-profile"]'), "setup screen");
    for (const [questionId, answer] of Object.entries(ANSWERS)) {
      click(query(root, `[data-testid="pick-${questionId}"]`));
      const input = query<HTMLInputElement>(root, `[data-testid="answer-${questionId}"]`);
      if (!input) throw new Error(`no answer input for ${questionId}`);
      input.value = answer;
    }
    click(query(root, '[data-testid="save-profile"]'));

    // -- practice round ------------------------------------------------------
    await until(() => query(root, '[data-testid="practice-check"]'), "practice screen");
    for (const letter of "STAR") {
      const tile = [...root.querySelectorAll(".tile")].find(
        (candidate) => candidate.textContent === letter,
      );
      click(tile);
    }
    click(query(root, '[data-testid="practice-check"]'));

    // -- 13 challenges -------------------------------------------------------
    const kindsSeen: string[] = [];
    for (let slot = 1; slot <= 13; slot++) {
      const challenge = await until(() => {
        const node = query<HTMLElement>(root, '[data-testid="challenge"]');
        const label = query(root, '[data-testid="slot-label"]');
        return label?.textContent === `Challenge ${slot}/13` ? node : null;
      }, `challenge ${slot}`);

      const kind = challenge.getAttribute("data-kind")!;
      kindsSeen.push(kind);
      const firstImage = challenge.querySelector("img")?.getAttribute("src") ?? "";
      const contentId = firstImage.split("/")[1] ?? "";
      const expected = kind === "standard" ? contentId.toUpperCase() : ANSWERS[contentId];
      if (!expected) throw new Error(`cannot derive answer for ${firstImage}`);

      if (kind === "recognition") {
        const option = await until(
          () =>
            [...root.querySelectorAll<HTMLButtonElement>('[data-testid="option"]')].find(
              (candidate) => candidate.textContent === expected && !candidate.disabled,
            ),
          `option ${expected}`,
        );
        click(option);
      } else {
        for (const letter of expected) {
          const tile = await until(
            () =>
              [...root.querySelectorAll<HTMLButtonElement>('[data-testid="tile"]')].find(
                (candidate) =>
                  candidate.getAttribute("data-letter") === letter && !candidate.disabled,
              ),
            `tile ${letter} on slot ${slot}`,
          );
          click(tile);
        }
        expect(query(root, '[data-testid="guess"]')!.textContent).toContain(expected);
        click(query(root, '[data-testid="submit"]'));
      }

      if (slot === 2) {
        // the first security solve pops the First Step badge toast
        await until(
          () =>
            [...root.querySelectorAll(".toast")].some((toast) =>
              toast.textContent?.includes("First Step"),
            ),
          "first badge toast",
        );
      }
      if (slot < 13) {
        await until(
          () => query(root, '[data-testid="slot-label"]')?.textContent === `Challenge ${slot + 1}/13`,
          `advance past slot ${slot}`,
        );
      }
    }

    // the published 7/3/3 interleave, recognition before recall
    expect(kindsSeen).toEqual([
      "standard", "recognition", "standard", "recognition", "standard", "recognition",
      "standard", "recall", "standard", "recall", "standard", "recall", "standard",
    ]);

    // -- summary ---------------------------------------------------------------
    const solved = await until(
      () => query(root, '[data-testid="summary-solved"]'),
      "summary screen",
    );
    expect(solved.textContent).toBe("Solved 13/13 challenges");
    expect(query(root, '[data-testid="summary-points"]')!.textContent).toBe("175 points");

    const badgeToasts = store.toasts.filter((toast) => toast.kind === "badge");
    expect(badgeToasts.map((toast) => toast.text)).toEqual([
      "Badge earned: First Step",
      "Badge earned: Recognition Master",
      "Badge earned: Recall Master",
      "Badge earned: Memory Champion",
    ]);
    // the final milestone toast is visible in the DOM
    expect(
      [...root.querySelectorAll(".toast")].some((toast) =>
        toast.textContent?.includes("Memory Champion"),
      ),
    ).toBe(true);
    const badgeNames = [...root.querySelectorAll('[data-testid="summary-badge"]')].map(
      (badge) => badge.textContent,
    );
    expect(badgeNames).toEqual([
      "First Step",
      "Recognition Master",
      "Recall Master",
      "Memory Champion",
    ]);

    // -- progress ---------------------------------------------------------------
    click(query(root, '[data-testid="show-progress"]'));
    const bar = await until(
      () => query<HTMLElement>(root, '[data-testid="month-bar"]'),
      "progress screen",
    );
    expect(bar.dataset["rate"]).toBe("1");
    expect(query(root, '[data-testid="month-text"]')!.textContent).toContain(
      "100% (6 of 6 security challenges)",
    );
  });

  it("keeps the challenge and balance intact on a wrong answer", async () => {
    const root = document.createElement("div");
    document.body.append(root);
    const store = createApp(root, "");

    const name = await until(
      () => query<HTMLInputElement>(root, '[data-testid="player-name"]'),
      "welcome screen",
    );
    name.value = "Retry Tester";
    click(query(root, '[data-testid="begin"]'));
    await until(() => query(root, '[data-testid="save-profile"]'), "setup screen");
    for (const [questionId, answer] of Object.entries(ANSWERS)) {
      click(query(root, `[data-testid="pick-${questionId}"]`));
      query<HTMLInputElement>(root, `[data-testid="answer-${questionId}"]`)!.value = answer;
    }
    click(query(root, '[data-testid="save-profile"]'));
    await until(() => query(root, '[data-testid="skip-practice"]'), "practice screen");
    click(query(root, '[data-testid="skip-practice"]'));

    await until(() => query(root, '[data-testid="challenge"]'), "first challenge");
    const wrongTile = await until(
      () =>
        [...root.querySelectorAll<HTMLButtonElement>('[data-testid="tile"]')].find(
          (tile) => !tile.disabled,
        ),
      "any tile",
    );
    click(wrongTile);
    click(query(root, '[data-testid="submit"]'));

    await until(() => store.toasts.length > 0 && !store.busy, "outcome toast");
    // still on challenge 1, balance still zero, guess reset for a retry
    expect(query(root, '[data-testid="slot-label"]')!.textContent).toBe("Challenge 1/13");
    expect(query(root, '[data-testid="points"]')!.textContent).toBe("0 pts");
  });
});
