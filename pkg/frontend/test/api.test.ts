import { afterEach, describe, expect, it, vi } from "vitest";

import { ApiClient, ApiError, freshCommandId } from "../src/api";

afterEach(() => {
  vi.unstubAllGlobals();
});

function jsonResponse(status: number, body: unknown): Response {
  return new Response(JSON.stringify(body), {
    status,
    headers: { "Content-Type": "application/json" },
  });
}

describe("command ids", () => {
  it("are fresh per command", () => {
    const a = freshCommandId();
    const b = freshCommandId();
    expect(a).not.toBe(b);
  });
});

describe("retry behaviour", () => {
  it("retries a failed request with the identical body and command id", async () => {
    const bodies: string[] = [];
    let calls = 0;
    vi.stubGlobal(
      "fetch",
      vi.fn(async (_url: unknown, init?: RequestInit) => {
        calls += 1;
        bodies.push(String(init?.body));
        if (calls === 1) throw new TypeError("network dropped");
        return jsonResponse(200, { correct: true, points: 10 });
      }),
    );

    const api = new ApiClient("http://stub");
    api.token = "t";
    const outcome = await api.submitAnswer("s1", "WALK");
    expect(outcome.points).toBe(10);
    expect(calls).toBe(2);
    expect(bodies[0]).toBe(bodies[1]);
    expect(JSON.parse(bodies[0]!).command_id).toMatch(/^cmd-/);
  });

  it("retries 503 responses and succeeds", async () => {
    let calls = 0;
    vi.stubGlobal(
      "fetch",
      vi.fn(async () => {
        calls += 1;
        if (calls < 3) return jsonResponse(503, { error: "busy" });
        return jsonResponse(200, { ok: true });
      }),
    );
    const api = new ApiClient("http://stub");
    await api.questions();
    expect(calls).toBe(3);
  });

  it("does not retry logical errors and raises ApiError", async () => {
    let calls = 0;
    vi.stubGlobal(
      "fetch",
      vi.fn(async () => {
        calls += 1;
        return jsonResponse(409, { error: "insufficient_points", detail: "balance 10" });
      }),
    );
    const api = new ApiClient("http://stub");
    const failure = await api.buyHint("s1", "reveal_letter").catch((err) => err);
    expect(failure).toBeInstanceOf(ApiError);
    expect(failure.code).toBe("insufficient_points");
    expect(calls).toBe(1);
  });

  it("sends the bearer token on every call", async () => {
    const seen: string[] = [];
    vi.stubGlobal(
      "fetch",
      vi.fn(async (_url: unknown, init?: RequestInit) => {
        seen.push((init?.headers as Record<string, string>)["Authorization"] ?? "");
        return jsonResponse(200, {});
      }),
    );
    const api = new ApiClient("http://stub");
    api.token = "secret-token";
    await api.current("s1");
    expect(seen).toEqual(["Bearer secret-token"]);
  });
});
