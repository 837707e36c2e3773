/** Bilingual labels. Welsh is the default; English on toggle. */

export type Lang = "cy" | "en";

const STRINGS: Record<string, { cy: string; en: string }> = {
  title: { cy: "Y Tiwtiadur", en: "Y Tiwtiadur" },
  tab_gapfill: { cy: "Llenwi bylchau", en: "Gap fill" },
  tab_identify: { cy: "Adnabod y gair", en: "Identify the word" },
  tab_wordtask: { cy: "Gair mewn cyd-destun", en: "Word in context" },
  tab_profiler: { cy: "Proffiliwr geirfa", en: "Vocabulary profiler" },
  tab_tagdemo: { cy: "Tagiwr", en: "Tagger" },
  text_type: { cy: "Math o destun", en: "Text type" },
  any_genre: { cy: "unrhyw", en: "any" },
  gap_frequency: { cy: "Amlder bylchau", en: "Gap frequency" },
  text_length: { cy: "Hyd y testun", en: "Text length" },
  frequency_band: { cy: "Band amlder", en: "Frequency band" },
  word_type: { cy: "Math o air", en: "Word type" },
  max_lines: { cy: "Uchafswm llinellau", en: "Maximum lines" },
  word: { cy: "Gair", en: "Word" },
  your_guess: { cy: "Eich ateb", en: "Your guess" },
  highlight_non_level: {
    cy: "Amlygu geiriau y tu allan i'r lefel",
    en: "Highlight non-level words",
  },
  start: { cy: "Dechrau", en: "Start" },
  check: { cy: "Gwirio", en: "Check" },
  show: { cy: "Dangos", en: "Show" },
  profile_btn: { cy: "Proffilio", en: "Profile" },
  tag_btn: { cy: "Tagio", en: "Tag" },
  bank_title: { cy: "Banc geiriau", en: "Word bank" },
  fill_all: {
    cy: "Llenwch bob bwlch cyn gwirio.",
    en: "Fill every gap before checking.",
  },
  score: { cy: "Sgôr", en: "Score" },
  no_material: {
    cy: "Dim deunydd ar gael ar gyfer y dewisiadau hyn.",
    en: "No material available for these settings.",
  },
  invalid: { cy: "Paramedrau annilys.", en: "Invalid parameters." },
  network: {
    cy: "Methu cyrraedd y gwasanaeth.",
    en: "Cannot reach the service.",
  },
  enter_text: { cy: "Rhowch destun.", en: "Enter some text." },
  enter_word: { cy: "Rhowch air.", en: "Enter a word." },
  total_words: { cy: "Cyfanswm geiriau", en: "Total words" },
  noun: { cy: "enw", en: "noun" },
  verb: { cy: "berf", en: "verb" },
  adjective: { cy: "ansoddair", en: "adjective" },
  adverb: { cy: "adferf", en: "adverb" },
  any_pos: { cy: "unrhyw", en: "any" },
};

let current: Lang = "cy";

export function currentLang(): Lang {
  return current;
}

export function setLang(lang: Lang): void {
  current = lang;
}

export function t(key: string): string {
  const entry = STRINGS[key];
  if (!entry) return key;
  return entry[current];
}

/** Re-label every element carrying a data-i18n attribute. */
export function applyI18n(root: ParentNode): void {
  root.querySelectorAll<HTMLElement>("[data-i18n]").forEach((el) => {
    el.textContent = t(el.dataset.i18n ?? "");
  });
}

/** Friendly message for a service failure code. */
export function errorMessage(code: string, fallback: string): string {
  if (code in STRINGS) return t(code);
  return fallback;
}
