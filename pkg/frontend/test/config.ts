// The end-to-end tests talk to a real game service spawned by global-setup.
export const API_BASE = "http://127.0.0.1:8787";
