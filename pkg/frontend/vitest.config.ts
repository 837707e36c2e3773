import { defineConfig } from "vitest/config";

export default defineConfig({
  test: {
    environment: "happy-dom",
    // same origin as the live service so integration fetches are not
    // treated as cross-site by the DOM implementation
    environmentOptions: {
      happyDOM: { url: "http://127.0.0.1:8056" },
    },
    include: ["test/**/*.test.ts"],
    testTimeout: 30000,
    hookTimeout: 30000,
  },
});
