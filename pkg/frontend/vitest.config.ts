import { defineConfig } from "vitest/config";

export default defineConfig({
  test: {
    environment: "happy-dom",
    include: ["test/**/*.test.ts"],
    // The integration suite boots a real decision service; give it headroom.
    testTimeout: 30_000,
    hookTimeout: 30_000,
  },
});
