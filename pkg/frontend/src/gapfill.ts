/** Gap-fill exercise: render the windowed text with input gaps, show the
 * shuffled word bank in its own panel, and color gaps after a server-side
 * check. The browser never sees which bank word belongs to which gap.
 */

import { Api, ClozeTask } from "./api.js";
import { t } from "./i18n.js";

export function renderTask(container: HTMLElement, task: ClozeTask): void {
  container.innerHTML = "";
  container.dataset.taskId = task.task_id;
  const text = document.createElement("p");
  text.className = "cloze-text";
  for (const item of task.display) {
    if ("gap" in item) {
      const input = document.createElement("input");
      input.type = "text";
      input.className = "gap";
      input.dataset.gap = String(item.gap);
      input.setAttribute("aria-label", `gap ${item.gap + 1}`);
      text.appendChild(input);
    } else {
      const span = document.createElement("span");
      span.className = "cloze-word";
      span.textContent = item.word;
      text.appendChild(span);
    }
    text.appendChild(document.createTextNode(" "));
  }
  container.appendChild(text);
}

export function renderBank(panel: HTMLElement, bank: string[]): void {
  panel.innerHTML = "";
  const title = document.createElement("h3");
  title.textContent = t("bank_title");
  panel.appendChild(title);
  const list = document.createElement("ul");
  for (const word of bank) {
    const li = document.createElement("li");
    li.className = "bank-word";
    li.textContent = word;
    list.appendChild(li);
  }
  panel.appendChild(list);
}

export function gapInputs(container: HTMLElement): HTMLInputElement[] {
  const inputs = Array.from(
    container.querySelectorAll<HTMLInputElement>("input.gap"),
  );
  // gap indices are answer positions; keep DOM order aligned with them
  inputs.sort((a, b) => Number(a.dataset.gap) - Number(b.dataset.gap));
  return inputs;
}

export function collectFills(container: HTMLElement): string[] {
  return gapInputs(container).map((input) => input.value.trim());
}

/** True when every gap has something in it; checking a partial fill is
 * blocked client-side so the server never sees a length mismatch. */
export function allFilled(fills: string[]): boolean {
  return fills.length > 0 && fills.every((f) => f !== "");
}

export function applyResults(
  container: HTMLElement,
  results: boolean[],
): void {
  for (const input of gapInputs(container)) {
    const ok = results[Number(input.dataset.gap)];
    input.classList.remove("correct", "incorrect");
    input.classList.add(ok ? "correct" : "incorrect");
  }
}

export function clearResults(container: HTMLElement): void {
  for (const input of gapInputs(container)) {
    input.classList.remove("correct", "incorrect");
  }
}

export async function checkFills(
  api: Api,
  container: HTMLElement,
  scoreEl: HTMLElement,
): Promise<boolean> {
  const fills = collectFills(container);
  if (!allFilled(fills)) {
    scoreEl.textContent = t("fill_all");
    return false;
  }
  const taskId = container.dataset.taskId ?? "";
  const outcome = await api.clozeCheck(taskId, fills);
  applyResults(container, outcome.results);
  scoreEl.textContent = `${t("score")}: ${outcome.correct}/${outcome.total}`;
  return true;
}
