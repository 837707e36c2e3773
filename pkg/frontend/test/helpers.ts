import { readFileSync } from "node:fs";
import { dirname, join } from "node:path";
import { fileURLToPath } from "node:url";

const HERE = dirname(fileURLToPath(import.meta.url));

/** Load the real page markup into the happy-dom document. */
export function loadPage(): Document {
  const html = readFileSync(join(HERE, "..", "src", "index.html"), "utf-8");
  const body = /<body>([\s\S]*)<\/body>/.exec(html);
  if (!body) throw new Error("index.html has no body");
  document.body.innerHTML = body[1].replace(/<script[\s\S]*?<\/script>/g, "");
  return document;
}

export type RecordedCall = { method: string; path: string; body?: unknown };

export type Route = {
  method: string;
  path: string;
  status?: number;
  reply: unknown | ((body: unknown) => unknown);
};

/** Replace global fetch with a canned router; returns the call log. */
export function installFetch(routes: Route[]): RecordedCall[] {
  const calls: RecordedCall[] = [];
  globalThis.fetch = (async (input: RequestInfo | URL, init?: RequestInit) => {
    const url = String(input);
    const path = url.replace(/^https?:\/\/[^/]+/, "");
    const method = init?.method ?? "GET";
    const reqBody = init?.body ? JSON.parse(String(init.body)) : undefined;
    calls.push({ method, path, body: reqBody });
    for (const route of routes) {
      if (route.method === method && path.startsWith(route.path)) {
        const payload = typeof route.reply === "function"
          ? (route.reply as (b: unknown) => unknown)(reqBody)
          : route.reply;
        return new Response(JSON.stringify(payload), {
          status: route.status ?? 200,
          headers: { "Content-Type": "application/json" },
        });
      }
    }
    return new Response(
      JSON.stringify({ error: "not_found", message: `no route ${path}` }),
      { status: 404, headers: { "Content-Type": "application/json" } },
    );
  }) as typeof fetch;
  return calls;
}

export function failingFetch(): void {
  globalThis.fetch = (async () => {
    throw new TypeError("fetch failed");
  }) as typeof fetch;
}

export async function until(
  cond: () => boolean,
  ms = 5000,
): Promise<void> {
  const start = Date.now();
  while (!cond()) {
    if (Date.now() - start > ms) throw new Error("timed out waiting");
    await new Promise((r) => setTimeout(r, 10));
  }
}

export const STATS = {
  documents: 2,
  tokens: 40,
  words: 30,
  language_types: { written: 2 },
  genres: { book: 1, letter: 1 },
};
