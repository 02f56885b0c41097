import { defineConfig } from "vitest/config";

export default defineConfig({
  test: {
    include: ["test/**/*.test.ts"],
    environment: "node",
    // the live suite builds a corpus and boots the real backend
    testTimeout: 30_000,
    hookTimeout: 60_000,
  },
});
