/** Page wiring: tabs, forms, the error banner, and the language toggle. */

import { Api, ApiError } from "./api.js";
import { applyI18n, errorMessage, setLang, t, Lang } from "./i18n.js";
import {
  checkFills,
  clearResults,
  renderBank,
  renderTask,
} from "./gapfill.js";
import { checkGuess, renderIdentify } from "./identify.js";
import { renderWordTask, reveal } from "./wordtask.js";
import { holdProfile, renderProfile } from "./profiler.js";
import { renderTagTable } from "./tagdemo.js";

const TEXT_LENGTHS = [100, 200, 300, 400, 500];
const IDENTIFY_BANDS = ["K1", "K2", "K3"];
const WORD_TYPES: Array<[string, string]> = [
  ["E", "noun"],
  ["B", "verb"],
  ["Ans", "adjective"],
  ["Adf", "adverb"],
];
const IDENTIFY_SENTENCES = 5;

function freshSeed(): number {
  return Math.floor(Math.random() * 2 ** 31);
}

function el<T extends HTMLElement>(doc: Document, id: string): T {
  const found = doc.getElementById(id);
  if (!found) throw new Error(`missing element #${id}`);
  return found as T;
}

export function initApp(doc: Document, api: Api): void {
  const banner = el<HTMLElement>(doc, "banner");

  function showError(err: unknown): void {
    banner.classList.remove("hidden");
    if (err instanceof ApiError) {
      banner.textContent = errorMessage(err.code, err.message);
    } else {
      banner.textContent = String(err);
    }
  }

  function clearError(): void {
    banner.classList.add("hidden");
    banner.textContent = "";
  }

  async function guarded(action: () => Promise<void>): Promise<void> {
    clearError();
    try {
      await action();
    } catch (err) {
      showError(err);
    }
  }

  // ----- tabs

  const tabs = el<HTMLElement>(doc, "tabs");
  tabs.addEventListener("click", (ev) => {
    const button = (ev.target as HTMLElement).closest("button[data-tab]");
    if (!button) return;
    const name = (button as HTMLElement).dataset.tab;
    doc.querySelectorAll<HTMLElement>(".panel").forEach((panel) => {
      panel.classList.toggle("active", panel.id === `panel-${name}`);
    });
    tabs.querySelectorAll("button").forEach((b) => {
      b.classList.toggle("active", b === button);
    });
  });

  // ----- language toggle

  function switchLang(lang: Lang): void {
    setLang(lang);
    applyI18n(doc);
  }
  el<HTMLButtonElement>(doc, "lang-cy").addEventListener("click", () =>
    switchLang("cy"),
  );
  el<HTMLButtonElement>(doc, "lang-en").addEventListener("click", () =>
    switchLang("en"),
  );

  // ----- gap fill

  const gfGenre = el<HTMLSelectElement>(doc, "gf-genre");
  const gfN = el<HTMLSelectElement>(doc, "gf-n");
  const gfLen = el<HTMLSelectElement>(doc, "gf-len");
  const gfTask = el<HTMLElement>(doc, "gf-task");
  const gfBank = el<HTMLElement>(doc, "gf-bank");
  const gfScore = el<HTMLElement>(doc, "gf-score");

  for (let n = 2; n <= 12; n++) {
    const opt = doc.createElement("option");
    opt.value = String(n);
    opt.textContent = String(n);
    if (n === 7) opt.selected = true;
    gfN.appendChild(opt);
  }
  for (const len of TEXT_LENGTHS) {
    const opt = doc.createElement("option");
    opt.value = String(len);
    opt.textContent = String(len);
    gfLen.appendChild(opt);
  }

  el<HTMLButtonElement>(doc, "gf-start").addEventListener("click", () =>
    guarded(async () => {
      const genre = gfGenre.value === "" ? null : gfGenre.value;
      const task = await api.clozeCreate({
        genre,
        gap_frequency: Number(gfN.value),
        text_length: Number(gfLen.value),
        seed: freshSeed(),
      });
      gfScore.textContent = "";
      renderTask(gfTask, task);
      renderBank(gfBank, task.bank);
    }),
  );

  el<HTMLButtonElement>(doc, "gf-check").addEventListener("click", () =>
    guarded(async () => {
      clearResults(gfTask);
      await checkFills(api, gfTask, gfScore);
    }),
  );

  // ----- identify the word

  const idBand = el<HTMLSelectElement>(doc, "id-band");
  const idType = el<HTMLSelectElement>(doc, "id-type");
  const idTask = el<HTMLElement>(doc, "id-task");
  const idGuess = el<HTMLInputElement>(doc, "id-guess");
  const idResult = el<HTMLElement>(doc, "id-result");

  for (const band of IDENTIFY_BANDS) {
    const opt = doc.createElement("option");
    opt.value = band;
    opt.textContent = band;
    idBand.appendChild(opt);
  }
  for (const [code, label] of WORD_TYPES) {
    const opt = doc.createElement("option");
    opt.value = code;
    opt.dataset.i18n = label;
    opt.textContent = t(label);
    idType.appendChild(opt);
  }

  el<HTMLButtonElement>(doc, "id-start").addEventListener("click", () =>
    guarded(async () => {
      const task = await api.identify({
        band: idBand.value,
        word_type: idType.value,
        max_sentences: IDENTIFY_SENTENCES,
        seed: freshSeed(),
      });
      idGuess.value = "";
      idResult.textContent = "";
      idResult.className = "guess-result";
      renderIdentify(idTask, task);
    }),
  );

  el<HTMLButtonElement>(doc, "id-check").addEventListener("click", () =>
    guarded(() => checkGuess(api, idTask, idGuess.value, idResult)),
  );

  // ----- word in context

  const wtWord = el<HTMLInputElement>(doc, "wt-word");
  const wtPos = el<HTMLSelectElement>(doc, "wt-pos");
  const wtLines = el<HTMLInputElement>(doc, "wt-lines");
  const wtTask = el<HTMLElement>(doc, "wt-task");
  const wtReveal = el<HTMLElement>(doc, "wt-reveal");

  {
    const any = doc.createElement("option");
    any.value = "";
    any.dataset.i18n = "any_pos";
    any.textContent = t("any_pos");
    wtPos.appendChild(any);
    for (const [code, label] of WORD_TYPES) {
      const opt = doc.createElement("option");
      opt.value = code;
      opt.dataset.i18n = label;
      opt.textContent = t(label);
      wtPos.appendChild(opt);
    }
  }

  el<HTMLButtonElement>(doc, "wt-start").addEventListener("click", () =>
    guarded(async () => {
      const word = wtWord.value.trim();
      if (word === "") {
        throw new ApiError("invalid", t("enter_word"), 0);
      }
      // the form caps this at 20; clamp as well in case of manual entry
      const maxLines = Math.min(20, Math.max(1, Number(wtLines.value) || 1));
      const task = await api.wordTask({
        word,
        pos: wtPos.value === "" ? null : wtPos.value,
        max_lines: maxLines,
        seed: freshSeed(),
      });
      renderWordTask(wtTask, wtReveal, task);
    }),
  );

  el<HTMLButtonElement>(doc, "wt-show").addEventListener("click", () =>
    reveal(wtReveal),
  );

  // ----- profiler

  const pfText = el<HTMLTextAreaElement>(doc, "pf-text");
  const pfHighlight = el<HTMLInputElement>(doc, "pf-highlight");
  const pfWords = el<HTMLElement>(doc, "pf-words");
  const pfSummary = el<HTMLElement>(doc, "pf-summary");

  el<HTMLButtonElement>(doc, "pf-run").addEventListener("click", () =>
    guarded(async () => {
      const text = pfText.value.trim();
      if (text === "") {
        throw new ApiError("invalid", t("enter_text"), 0);
      }
      const wanted = pfHighlight.checked;
      holdProfile(await api.profile(text, wanted), wanted);
      renderProfile(pfWords, pfSummary, wanted);
    }),
  );

  // inverting the toggle re-renders from the held profile, no refetch
  pfHighlight.addEventListener("change", () => {
    renderProfile(pfWords, pfSummary, pfHighlight.checked);
  });

  // ----- tagger demo

  const tgText = el<HTMLInputElement>(doc, "tg-text");
  const tgTable = el<HTMLElement>(doc, "tg-table");
  el<HTMLButtonElement>(doc, "tg-run").addEventListener("click", () =>
    guarded(async () => {
      const text = tgText.value.trim();
      if (text === "") {
        throw new ApiError("invalid", t("enter_text"), 0);
      }
      const res = await api.tag(text);
      renderTagTable(tgTable, res.rows);
    }),
  );

  // ----- initial data

  applyI18n(doc);
  void guarded(async () => {
    const stats = await api.stats();
    const any = doc.createElement("option");
    any.value = "";
    any.dataset.i18n = "any_genre";
    any.textContent = t("any_genre");
    gfGenre.appendChild(any);
    for (const genre of Object.keys(stats.genres).sort()) {
      const opt = doc.createElement("option");
      opt.value = genre;
      opt.textContent = genre;
      gfGenre.appendChild(opt);
    }
  });
}

// Auto-start in the browser; tests build their own DOM and call initApp.
if (typeof document !== "undefined" && document.getElementById("tabs")) {
  initApp(document, new Api(""));
}
