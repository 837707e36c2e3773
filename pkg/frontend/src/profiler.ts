/** Vocabulary profiler: words colored by frequency band plus a band
 * breakdown. The highlight toggle is a pure client-side inversion; the
 * counts fetched once are never refetched for it.
 */

import { Profile } from "./api.js";
import { t } from "./i18n.js";

type Held = { profile: Profile; fetchedWith: boolean };

let held: Held | null = null;

export function holdProfile(profile: Profile, fetchedWith: boolean): void {
  held = { profile, fetchedWith };
}

export function heldProfile(): Profile | null {
  return held ? held.profile : null;
}

export function renderProfile(
  wordsEl: HTMLElement,
  summaryEl: HTMLElement,
  highlightNonLevel: boolean,
): void {
  if (!held) return;
  const { profile, fetchedWith } = held;
  const invert = highlightNonLevel !== fetchedWith;

  wordsEl.innerHTML = "";
  for (const entry of profile.entries) {
    const span = document.createElement("span");
    const flag = invert ? !entry.highlight : entry.highlight;
    span.className = `band-${entry.band}` + (flag ? " highlight" : "");
    span.textContent = entry.word;
    wordsEl.appendChild(span);
    wordsEl.appendChild(document.createTextNode(" "));
  }

  summaryEl.innerHTML = "";
  const table = document.createElement("table");
  for (const [band, count] of Object.entries(profile.counts)) {
    const row = document.createElement("tr");
    const pct = profile.percentages[band] ?? 0;
    row.innerHTML =
      `<td>${band}</td><td>${count}</td><td>${pct.toFixed(1)}%</td>`;
    table.appendChild(row);
  }
  const total = document.createElement("tr");
  total.innerHTML =
    `<td>${t("total_words")}</td><td>${profile.total_words}</td><td></td>`;
  table.appendChild(total);
  summaryEl.appendChild(table);
}
