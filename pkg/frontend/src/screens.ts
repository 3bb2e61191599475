// One render function per screen. Each returns a fresh subtree; main.ts swaps
// it into the app root whenever the store changes.

import type { Question } from "./api";
import { revealedPrefix, tileIsSpent } from "./compose";
import { PRACTICE, practiceGuessIsRight } from "./practice";
import type { GameStore } from "./store";
import { BADGE_NAMES } from "./store";
import { button, el } from "./ui";

export function renderWelcome(store: GameStore): HTMLElement {
  const name = el("input", {
    "data-testid": "player-name",
    placeholder: "your name",
    maxlength: "80",
  });
  return el(
    "section",
    { class: "screen" },
    el("h1", {}, "cuequest"),
    el("p", {}, "Train yourself to remember strong security answers by playing."),
    name,
    button("Start", () => void store.begin(name.value.trim() || "player"), {
      "data-testid": "begin",
      class: "primary",
    }),
  );
}

export function renderSetup(store: GameStore, questions: Question[]): HTMLElement {
  const picked = new Map<string, { answer: HTMLInputElement; cue: HTMLInputElement }>();
  const note = el("p", { class: "hint-note", "data-testid": "setup-note" }, "Pick exactly 3 questions.");

  const rows = questions.map((question) => {
    const check = el("input", {
      type: "checkbox",
      "data-testid": `pick-${question.id}`,
    });
    const answer = el("input", {
      "data-testid": `answer-${question.id}`,
      placeholder: "one word, letters only",
      maxlength: "12",
    });
    const cue = el("input", {
      "data-testid": `cue-${question.id}`,
      placeholder: "optional reminder shown as a paid hint",
    });
    const preview = el(
      "div",
      { class: "cue-preview" },
      ...[1, 2, 3, 4].map((n) =>
        el("img", {
          src: `assets/${question.id}/${n}.svg`,
          alt: `cue image ${n} for ${question.prompt}`,
          class: "thumb",
        }),
      ),
    );
    const details = el("div", { class: "entry-details hidden" }, answer, cue, preview);
    check.addEventListener("change", () => {
      if (check.checked) {
        if (picked.size >= 3) {
          check.checked = false;
          return;
        }
        picked.set(question.id, { answer, cue });
        details.classList.remove("hidden");
      } else {
        picked.delete(question.id);
        details.classList.add("hidden");
      }
      note.textContent = `${picked.size} of 3 questions picked.`;
    });
    return el(
      "div",
      { class: "question-row" },
      el("label", {}, check, " ", question.prompt),
      details,
    );
  });

  const save = button(
    "Save profile",
    () => {
      if (picked.size !== 3) {
        note.textContent = "Pick exactly 3 questions.";
        return;
      }
      const entries = [...picked.entries()].map(([question_id, inputs]) => ({
        question_id,
        answer: inputs.answer.value,
        cue: inputs.cue.value,
      }));
      void store.saveProfile(entries);
    },
    { "data-testid": "save-profile", class: "primary" },
  );

  return el(
    "section",
    { class: "screen" },
    el("h2", {}, "Choose your security questions"),
    note,
    ...rows,
    save,
  );
}

export function renderPractice(store: GameStore): HTMLElement {
  let typed = "";
  const guessBox = el("div", { class: "guess", "data-testid": "practice-guess" });
  const feedback = el("p", { "data-testid": "practice-feedback" });

  const refresh = () => {
    guessBox.textContent = typed || " ";
  };
  refresh();

  const tiles = PRACTICE.bank.map((letter) =>
    button(
      letter,
      () => {
        typed += letter;
        refresh();
      },
      { class: "tile" },
    ),
  );

  return el(
    "section",
    { class: "screen" },
    el("h2", {}, "Practice round"),
    el("p", {}, "Find the word the four pictures share. This one is just for warming up."),
    el(
      "div",
      { class: "image-grid" },
      ...PRACTICE.captions.map((caption) =>
        el("div", { class: "practice-card" }, caption),
      ),
    ),
    guessBox,
    el("div", { class: "bank" }, ...tiles),
    el(
      "div",
      { class: "actions" },
      button(
        "Delete",
        () => {
          typed = typed.slice(0, -1);
          refresh();
        },
        {},
      ),
      button(
        "Check",
        () => {
          if (practiceGuessIsRight(typed)) {
            feedback.textContent = "Correct, you are ready!";
            void store.startSession();
          } else {
            feedback.textContent = "Not quite, try again or skip ahead.";
            typed = "";
            refresh();
          }
        },
        { "data-testid": "practice-check", class: "primary" },
      ),
      button("Skip practice", () => store.skipPractice(), {
        "data-testid": "skip-practice",
      }),
    ),
    feedback,
  );
}

export function renderGame(store: GameStore): HTMLElement {
  const view = store.view;
  if (!view) return el("section", { class: "screen" }, el("p", {}, "loading…"));

  const header = el(
    "header",
    { class: "game-header" },
    el("span", { "data-testid": "slot-label" }, `Challenge ${view.position}/${view.total}`),
    el("span", { class: "points", "data-testid": "points" }, `${store.points} pts`),
  );

  const images = el(
    "div",
    { class: "image-grid" },
    ...view.images.map((src, i) =>
      el("img", { src, alt: `picture ${i + 1}`, class: "challenge-img" }),
    ),
  );

  const parts: (HTMLElement | null)[] = [header];
  if (view.prompt) {
    parts.push(el("p", { class: "prompt", "data-testid": "prompt" }, view.prompt));
  }
  parts.push(images);

  const body = el(
    "section",
    { class: "screen game", "data-testid": "challenge", "data-kind": view.kind },
  );

  if (view.kind === "recognition") {
    parts.push(
      el(
        "div",
        { class: "options" },
        ...(view.options ?? []).map((option, index) =>
          button(option, () => void store.chooseOption(index), {
            class: "option",
            "data-testid": "option",
            disabled: store.busy,
          }),
        ),
      ),
    );
  } else {
    const prefix = revealedPrefix(view);
    const guessRow = el(
      "div",
      { class: "guess", "data-testid": "guess" },
      prefix ? el("span", { class: "revealed" }, prefix) : null,
      el("span", {}, store.guess.slice(prefix.length) || " "),
    );

    const bank = el(
      "div",
      { class: "bank" },
      ...(view.bank ?? []).map((cell, index) =>
        button(cell.letter, () => store.tap(index), {
          class: "tile",
          "data-testid": "tile",
          "data-letter": cell.letter,
          disabled: tileIsSpent(view, store.taps, index) || store.busy,
        }),
      ),
    );

    const affordable = store.points >= 50;
    const hintTitle = affordable ? "costs 50 points" : `need 50 points, you have ${store.points}`;
    const hints = el(
      "div",
      { class: "hints" },
      button("Reveal a letter (50)", () => void store.buyReveal(), {
        "data-testid": "buy-reveal",
        disabled: !affordable || store.busy,
        title: hintTitle,
      }),
      ...[1, 2, 3, 4].map((image) =>
        button(`Cue ${image} (50)`, () => void store.buyCue(image), {
          "data-testid": `buy-cue-${image}`,
          disabled:
            !affordable ||
            store.busy ||
            (view.cues_shown ?? []).some((cue) => cue.image === image),
          title: hintTitle,
        }),
      ),
    );

    const shownCues = el(
      "ul",
      { class: "cues-shown" },
      ...(view.cues_shown ?? []).map((cue) =>
        el("li", { "data-testid": "cue-text" }, `picture ${cue.image}: ${cue.text}`),
      ),
    );

    parts.push(
      guessRow,
      bank,
      el(
        "div",
        { class: "actions" },
        button("Delete", () => store.deleteLast(), { "data-testid": "delete" }),
        button("Submit", () => void store.submitGuess(), {
          "data-testid": "submit",
          class: "primary",
          disabled: store.busy,
        }),
      ),
      hints,
      shownCues,
    );
  }

  for (const part of parts) if (part) body.append(part);
  return body;
}

export function renderSummary(store: GameStore): HTMLElement {
  if (store.screen.name !== "summary") throw new Error("wrong screen");
  const summary = store.screen.summary;
  return el(
    "section",
    { class: "screen" },
    el("h2", {}, "Session complete"),
    el(
      "p",
      { "data-testid": "summary-solved" },
      `Solved ${summary.solved.total}/13 challenges`,
    ),
    el("p", { "data-testid": "summary-points" }, `${summary.final_points} points`),
    el(
      "p",
      {},
      `Standard ${summary.solved.standard}/7, recognition ${summary.solved.recognition}/3, ` +
        `recall ${summary.solved.recall}/3. Hints used: ${summary.hints.total}, ` +
        `verbal cues: ${summary.verbal_cues_used}.`,
    ),
    el(
      "ul",
      { class: "badge-list" },
      ...summary.badges.map((badge) =>
        el("li", { "data-testid": "summary-badge" }, BADGE_NAMES[badge] ?? badge),
      ),
    ),
    button("Monthly progress", () => void store.showProgress(), {
      "data-testid": "show-progress",
      class: "primary",
    }),
  );
}

export function renderProgress(store: GameStore): HTMLElement {
  if (store.screen.name !== "progress") throw new Error("wrong screen");
  const series = store.screen.series;
  const rows = series.map((entry) => {
    // the service owns the success rate; this view only formats it
    const percent = `${Math.round(entry.rate * 100)}%`;
    return el(
      "div",
      { class: "month-row", "data-testid": "month-row" },
      el("span", { class: "month-label" }, entry.month),
      el(
        "div",
        { class: "bar-track" },
        el("div", {
          class: "bar-fill",
          style: `width: ${entry.rate * 100}%`,
          "data-testid": "month-bar",
          "data-rate": String(entry.rate),
        }),
      ),
      el(
        "span",
        { class: "month-text", "data-testid": "month-text" },
        `${percent} (${entry.solved} of ${entry.attempted} security challenges)`,
      ),
    );
  });
  return el(
    "section",
    { class: "screen" },
    el("h2", {}, "Monthly progress"),
    series.length
      ? el("div", { class: "progress-list" }, ...rows)
      : el("p", {}, "No security challenges attempted yet."),
  );
}
