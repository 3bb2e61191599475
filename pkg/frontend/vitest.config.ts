import { defineConfig } from "vitest/config";

// The happy-dom document origin points at the live test service, so the app
// under test issues plain same-origin fetches exactly like the deployed
// client does behind its reverse proxy.
export default defineConfig({
  test: {
    environment: "happy-dom",
    environmentOptions: {
      happyDOM: {
        url: "http://127.0.0.1:8787",
      },
    },
    globalSetup: "./test/global-setup.ts",
    testTimeout: 60_000,
    hookTimeout: 60_000,
  },
});
