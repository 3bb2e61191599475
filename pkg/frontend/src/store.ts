// Central view state: which screen is up, the mirrored challenge view, the
// composed guess, the points balance and badge notifications. Mutations go
// through the API client; the authoritative state is always whatever the
// service answered last, so an optimistic update can never drift.

import { ApiClient, ApiError } from "./api";
import type {
  ChallengeView,
  CurrentResponse,
  MonthProgress,
  Outcome,
  Question,
  SessionSummary,
} from "./api";
import { guessText, tapTile, untapLast } from "./compose";

export const BADGE_NAMES: Record<string, string> = {
  "first-step": "First Step",
  "recognition-master": "Recognition Master",
  "recall-master": "Recall Master",
  "memory-champion": "Memory Champion",
};

export type Screen =
  | { name: "welcome" }
  | { name: "setup"; questions: Question[] }
  | { name: "practice" }
  | { name: "game" }
  | { name: "summary"; summary: SessionSummary }
  | { name: "progress"; series: MonthProgress[] };

export interface Toast {
  kind: "badge" | "points" | "cue" | "error";
  text: string;
}

type Listener = () => void;

export class GameStore {
  screen: Screen = { name: "welcome" };
  playerId: string | null = null;
  sessionId: string | null = null;
  view: ChallengeView | null = null;
  points = 0;
  badges: string[] = [];
  taps: number[] = [];
  toasts: Toast[] = [];
  busy = false;
  lastError: string | null = null;

  private listeners: Listener[] = [];

  constructor(public api: ApiClient) {}

  subscribe(listener: Listener): () => void {
    this.listeners.push(listener);
    return () => {
      this.listeners = this.listeners.filter((l) => l !== listener);
    };
  }

  private emit() {
    for (const listener of this.listeners) listener();
  }

  private toast(kind: Toast["kind"], text: string) {
    this.toasts.push({ kind, text });
  }

  get guess(): string {
    return this.view ? guessText(this.view, this.taps) : "";
  }

  // -- flow -----------------------------------------------------------------

  async begin(name: string) {
    await this.run(async () => {
      const created = await this.api.createPlayer(name);
      this.playerId = created.player_id;
      const catalog = await this.api.questions();
      this.screen = { name: "setup", questions: catalog.questions };
    });
  }

  async saveProfile(entries: { question_id: string; answer: string; cue: string }[]) {
    await this.run(async () => {
      if (!this.playerId) throw new Error("no player yet");
      await this.api.putProfile(
        this.playerId,
        entries.map((entry) => ({
          question_id: entry.question_id,
          answer: entry.answer,
          images: [1, 2, 3, 4].map((n) => `assets/${entry.question_id}/${n}.svg`),
          cues: [1, 2, 3, 4].map(
            (n) => entry.cue.trim() || `picture ${n} hints at your answer`,
          ),
        })),
      );
      this.screen = { name: "practice" };
    });
  }

  skipPractice() {
    if (this.screen.name === "practice") {
      void this.startSession();
    }
  }

  async startSession(seed?: number) {
    await this.run(async () => {
      if (!this.playerId) throw new Error("no player yet");
      const started = await this.api.startSession(this.playerId, seed);
      this.sessionId = started.session_id;
      await this.refreshCurrent();
      this.screen = { name: "game" };
    });
  }

  private async refreshCurrent() {
    if (!this.sessionId) return;
    const current: CurrentResponse = await this.api.current(this.sessionId);
    this.view = current.challenge;
    this.points = current.points;
    this.badges = current.badges;
    this.taps = [];
  }

  // -- play actions ----------------------------------------------------------

  tap(index: number) {
    if (!this.view) return;
    this.taps = tapTile(this.view, this.taps, index);
    this.emit();
  }

  deleteLast() {
    this.taps = untapLast(this.taps);
    this.emit();
  }

  async submitGuess() {
    if (!this.view) return;
    const tappedOnly = this.guess;
    if (!tappedOnly) return;
    await this.submit(tappedOnly);
  }

  async chooseOption(index: number) {
    await this.submit(index);
  }

  private async submit(submission: string | number) {
    await this.run(async () => {
      if (!this.sessionId) throw new Error("no session");
      const outcome: Outcome = await this.api.submitAnswer(this.sessionId, submission);
      this.points = outcome.points;
      if (outcome.correct) {
        this.toast("points", `+${outcome.points_delta} points`);
      } else if (outcome.points_delta < 0) {
        this.toast("points", `${outcome.points_delta} points`);
      } else {
        this.toast("points", "no points lost, try again");
      }
      for (const badge of outcome.badges_awarded) {
        this.badges.push(badge);
        this.toast("badge", `Badge earned: ${BADGE_NAMES[badge] ?? badge}`);
      }
      if (outcome.next_state === "session_complete") {
        const summary = await this.api.summary(this.sessionId);
        this.screen = { name: "summary", summary };
        this.view = null;
      } else if (outcome.next_state === "next_challenge") {
        await this.refreshCurrent();
      } else {
        this.taps = [];
      }
    });
  }

  async buyReveal() {
    await this.run(async () => {
      if (!this.sessionId) throw new Error("no session");
      const result = await this.api.buyHint(this.sessionId, "reveal_letter");
      this.points = result.points;
      await this.refreshCurrent();
    });
  }

  async buyCue(image: number) {
    await this.run(async () => {
      if (!this.sessionId) throw new Error("no session");
      const result = await this.api.buyHint(this.sessionId, "verbal_cue", image);
      this.points = result.points;
      this.toast("cue", result.cue_text ?? "");
      await this.refreshCurrent();
    });
  }

  async showProgress() {
    await this.run(async () => {
      if (!this.playerId) throw new Error("no player yet");
      const progress = await this.api.progress(this.playerId);
      this.screen = { name: "progress", series: progress.series };
    });
  }

  // -- plumbing ---------------------------------------------------------------

  private async run(action: () => Promise<void>) {
    this.busy = true;
    this.lastError = null;
    this.emit();
    try {
      await action();
    } catch (err) {
      if (err instanceof ApiError) {
        this.lastError = err.detail;
        this.toast("error", err.detail);
      } else {
        this.lastError = String(err);
        this.toast("error", "connection trouble, please retry");
      }
    } finally {
      this.busy = false;
      this.emit();
    }
  }
}
