/** Word in context: concordance-style lines with the target blanked.
 * The target word stays hidden until the learner clicks Show.
 */

import { WordTask } from "./api.js";
import { renderLines } from "./identify.js";
import { t } from "./i18n.js";

export function renderWordTask(
  container: HTMLElement,
  revealEl: HTMLElement,
  task: WordTask,
): void {
  container.dataset.taskId = task.task_id;
  renderLines(container, task.lines);
  // stash the answer but keep it out of sight until Show
  revealEl.textContent = "";
  revealEl.dataset.word = task.reveal;
  revealEl.classList.add("hidden");
}

export function isRevealed(revealEl: HTMLElement): boolean {
  return !revealEl.classList.contains("hidden");
}

export function reveal(revealEl: HTMLElement): void {
  revealEl.textContent = revealEl.dataset.word ?? "";
  revealEl.classList.remove("hidden");
}

export function revealButtonLabel(): string {
  return t("show");
}
