// Typed client for the game service. Every mutating call carries a
// client-generated command id; retries reuse the same id so the server can
// deduplicate, which makes retrying after a flaky response always safe.

export type ChallengeKind = "standard" | "recognition" | "recall";

export interface BankCell {
  letter: string;
  consumed: boolean;
}

export interface RevealedLetter {
  position: number;
  letter: string;
}

export interface CueShown {
  image: number;
  text: string;
}

export interface ChallengeView {
  position: number;
  total: number;
  kind: ChallengeKind;
  images: string[];
  prompt: string | null;
  options?: string[];
  bank?: BankCell[];
  revealed?: RevealedLetter[];
  cues_shown?: CueShown[];
  answer_letter_count?: number;
}

export interface CurrentResponse {
  challenge: ChallengeView;
  points: number;
  badges: string[];
  session: string;
  status: string;
}

export interface Outcome {
  correct: boolean;
  points_delta: number;
  points: number;
  badges_awarded: string[];
  next_state: "same_challenge" | "next_challenge" | "session_complete";
}

export interface HintResult {
  hint: "reveal_letter" | "verbal_cue";
  points_delta: number;
  points: number;
  position?: number;
  letter?: string;
  image?: number;
  cue_text?: string;
}

export interface SessionSummary {
  solved: { standard: number; recognition: number; recall: number; total: number };
  hints: { standard: number; recall: number; total: number };
  verbal_cues_used: number;
  wrong_attempts: number;
  final_points: number;
  duration_seconds: number;
  badges: string[];
}

export interface Question {
  id: string;
  prompt: string;
}

export interface ProfileEntryInput {
  question_id: string;
  answer: string;
  images: string[];
  cues: string[];
}

export interface MonthProgress {
  month: string;
  attempted: number;
  solved: number;
  rate: number;
}

export interface BadgeRecord {
  id: string;
  name: string;
  awarded_at: string;
}

export class ApiError extends Error {
  constructor(
    public status: number,
    public code: string,
    public detail: string,
  ) {
    super(`${code}: ${detail}`);
  }
}

const RETRYABLE_STATUS = new Set([502, 503, 504]);
const MAX_ATTEMPTS = 3;

let commandCounter = 0;

export function freshCommandId(): string {
  commandCounter += 1;
  return `cmd-${Date.now()}-${commandCounter}-${Math.random().toString(36).slice(2, 10)}`;
}

export class ApiClient {
  token: string | null = null;

  constructor(public base: string = "") {}

  private async request<T>(
    method: string,
    path: string,
    body?: unknown,
    attempt = 1,
  ): Promise<T> {
    const headers: Record<string, string> = { "Content-Type": "application/json" };
    if (this.token) headers["Authorization"] = `Bearer ${this.token}`;
    let response: Response;
    try {
      response = await fetch(this.base + path, {
        method,
        headers,
        body: body === undefined ? undefined : JSON.stringify(body),
      });
    } catch (err) {
      // network failure: the request may or may not have landed; the command
      // id dedupe makes an identical retry safe
      if (attempt < MAX_ATTEMPTS) return this.request(method, path, body, attempt + 1);
      throw err;
    }
    if (RETRYABLE_STATUS.has(response.status) && attempt < MAX_ATTEMPTS) {
      return this.request(method, path, body, attempt + 1);
    }
    const text = await response.text();
    const data = text ? JSON.parse(text) : {};
    if (!response.ok) {
      throw new ApiError(
        response.status,
        data.error ?? "http_error",
        data.detail ?? response.statusText,
      );
    }
    return data as T;
  }

  async createPlayer(name: string): Promise<{ player_id: string; token: string }> {
    const created = await this.request<{ player_id: string; token: string }>(
      "POST",
      "/players",
      { name },
    );
    this.token = created.token;
    return created;
  }

  questions(): Promise<{ questions: Question[] }> {
    return this.request("GET", "/questions");
  }

  putProfile(playerId: string, entries: ProfileEntryInput[]): Promise<unknown> {
    return this.request("PUT", `/players/${playerId}/profile`, { entries });
  }

  startSession(playerId: string, seed?: number): Promise<{ session_id: string; seed: number }> {
    return this.request("POST", `/players/${playerId}/sessions`, seed === undefined ? {} : { seed });
  }

  current(sessionId: string): Promise<CurrentResponse> {
    return this.request("GET", `/sessions/${sessionId}/current`);
  }

  submitAnswer(
    sessionId: string,
    submission: string | number,
    commandId = freshCommandId(),
  ): Promise<Outcome> {
    return this.request("POST", `/sessions/${sessionId}/answer`, {
      command_id: commandId,
      submission,
    });
  }

  buyHint(
    sessionId: string,
    kind: "reveal_letter" | "verbal_cue",
    imageIndex?: number,
    commandId = freshCommandId(),
  ): Promise<HintResult> {
    const body: Record<string, unknown> = { command_id: commandId, kind };
    if (imageIndex !== undefined) body["image_index"] = imageIndex;
    return this.request("POST", `/sessions/${sessionId}/hint`, body);
  }

  summary(sessionId: string): Promise<SessionSummary> {
    return this.request("GET", `/sessions/${sessionId}/summary`);
  }

  badges(playerId: string): Promise<{ badges: BadgeRecord[] }> {
    return this.request("GET", `/players/${playerId}/badges`);
  }

  progress(playerId: string): Promise<{ granularity: string; series: MonthProgress[] }> {
    return this.request("GET", `/players/${playerId}/progress?granularity=monthly`);
  }
}
