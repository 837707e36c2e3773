import { beforeEach, describe, expect, it } from "vitest";
import { Api } from "../src/api.js";
import { initApp } from "../src/app.js";
import { setLang } from "../src/i18n.js";
import {
  RecordedCall,
  Route,
  STATS,
  installFetch,
  loadPage,
  until,
} from "./helpers.js";

// A small canned task: "Mae y gath yn y tŷ ." with two gaps.
const TASK = {
  task_id: "t-123",
  doc_id: "doc-a",
  display: [
    { word: "Mae" },
    { word: "y" },
    { gap: 0 },
    { word: "yn" },
    { word: "y" },
    { gap: 1 },
    { word: "." },
  ],
  bank: ["tŷ", "gath"],
  gap_count: 2,
  params: { genre: "book", gap_frequency: 3, text_length: 100, seed: 1 },
};

function routes(results: (fills: string[]) => boolean[]): Route[] {
  return [
    { method: "GET", path: "/api/corpus/stats", reply: STATS },
    { method: "POST", path: "/api/tiwtiadur/cloze/check",
      reply: (body: unknown) => {
        const fills = (body as { fills: string[] }).fills;
        const r = results(fills);
        return { task_id: TASK.task_id, results: r,
                 correct: r.filter(Boolean).length, total: r.length };
      } },
    { method: "POST", path: "/api/tiwtiadur/cloze", reply: TASK },
  ];
}

function correctFills(fills: string[]): boolean[] {
  return [fills[0] === "gath", fills[1] === "tŷ"];
}

describe("gap fill", () => {
  let calls: RecordedCall[];
  let doc: Document;

  beforeEach(async () => {
    setLang("cy");
    calls = installFetch(routes(correctFills));
    doc = loadPage();
    initApp(doc, new Api(""));
    (doc.getElementById("gf-start") as HTMLButtonElement).click();
    await until(() => doc.querySelectorAll("input.gap").length === 2);
  });

  it("renders gaps and the bank in its own panel", () => {
    const words = Array.from(doc.querySelectorAll("#gf-task .cloze-word"))
      .map((el) => el.textContent);
    expect(words).toEqual(["Mae", "y", "yn", "y", "."]);
    const bank = Array.from(doc.querySelectorAll("#gf-bank .bank-word"))
      .map((el) => el.textContent);
    expect(bank).toEqual(["tŷ", "gath"]);
  });

  it("task payload maps no gap to a word", () => {
    // no ordered answers anywhere in the payload the browser received
    expect("answers" in TASK).toBe(false);
    for (const item of TASK.display) {
      if ("gap" in item) {
        expect(typeof item.gap).toBe("number");
        expect(Object.keys(item)).toEqual(["gap"]);
      }
    }
  });

  it("colors correct fills green and wrong fills red", async () => {
    const inputs = Array.from(
      doc.querySelectorAll<HTMLInputElement>("input.gap"),
    );
    inputs[0].value = "gath";
    inputs[1].value = "anghywir";
    (doc.getElementById("gf-check") as HTMLButtonElement).click();
    await until(() => inputs[0].classList.contains("correct"));
    expect(inputs[0].classList.contains("correct")).toBe(true);
    expect(inputs[0].classList.contains("incorrect")).toBe(false);
    expect(inputs[1].classList.contains("incorrect")).toBe(true);

    // retry after fixing: the red gap turns green
    inputs[1].value = "tŷ";
    (doc.getElementById("gf-check") as HTMLButtonElement).click();
    await until(() => inputs[1].classList.contains("correct"));
    expect(inputs[1].classList.contains("incorrect")).toBe(false);
    const score = doc.getElementById("gf-score")!;
    expect(score.textContent).toContain("2/2");
  });

  it("blocks checking while a gap is empty", async () => {
    const inputs = Array.from(
      doc.querySelectorAll<HTMLInputElement>("input.gap"),
    );
    inputs[0].value = "gath";
    const before = calls.filter((c) =>
      c.path.endsWith("/cloze/check")).length;
    (doc.getElementById("gf-check") as HTMLButtonElement).click();
    await until(() =>
      (doc.getElementById("gf-score")!.textContent ?? "") !== "");
    const after = calls.filter((c) =>
      c.path.endsWith("/cloze/check")).length;
    expect(after).toBe(before);
    expect(inputs[0].classList.contains("correct")).toBe(false);
  });
});
