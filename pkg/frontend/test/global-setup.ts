// Boots the real Python game service for the end-to-end tests and tears it
// down afterwards. Unit tests that stub fetch never touch it.

import { spawn } from "node:child_process";
import { mkdtempSync, rmSync } from "node:fs";
import { tmpdir } from "node:os";
import { join } from "node:path";

import { API_BASE } from "./config";

export default async function setup(): Promise<() => void> {
  const dataDir = mkdtempSync(join(tmpdir(), "cuequest-e2e-"));
  const bind = API_BASE.replace("http://", "");
  const service = spawn(
    "python3",
    ["-m", "cuequest", "serve", "--data-dir", dataDir, "--bind", bind],
    { stdio: "ignore" },
  );

  const deadline = Date.now() + 30_000;
  for (;;) {
    try {
      const response = await fetch(`${API_BASE}/health`);
      if (response.ok) break;
    } catch {
      // not up yet
    }
    if (Date.now() > deadline) {
      service.kill();
      throw new Error("game service did not come up on " + API_BASE);
    }
    await new Promise((resolve) => setTimeout(resolve, 200));
  }

  return () => {
    service.kill();
    rmSync(dataDir, { recursive: true, force: true });
  };
}
