import { defineConfig } from "vite";

// In dev the API and the pack's image assets are proxied to the game service.
const SERVICE = "http://127.0.0.1:8000";

export default defineConfig({
  server: {
    proxy: {
      "/players": SERVICE,
      "/sessions": SERVICE,
      "/questions": SERVICE,
      "/health": SERVICE,
      "/assets": SERVICE,
    },
  },
});
