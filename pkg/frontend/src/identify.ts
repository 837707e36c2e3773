/** Word identification: blanked sentences for a banded word, one guess,
 * checked against the server-held answer.
 */

import { Api, IdentifyTask, TaskLine } from "./api.js";
import { t } from "./i18n.js";

export function renderLines(
  container: HTMLElement,
  lines: TaskLine[],
): void {
  container.innerHTML = "";
  const list = document.createElement("ol");
  list.className = "task-lines";
  for (const line of lines) {
    const li = document.createElement("li");
    li.dataset.docId = line.doc_id;
    li.textContent = line.tokens.join(" ");
    list.appendChild(li);
  }
  container.appendChild(list);
}

export function renderIdentify(
  container: HTMLElement,
  task: IdentifyTask,
): void {
  container.dataset.taskId = task.task_id;
  renderLines(container, task.lines);
}

export async function checkGuess(
  api: Api,
  container: HTMLElement,
  guess: string,
  resultEl: HTMLElement,
): Promise<void> {
  if (guess.trim() === "") {
    resultEl.textContent = t("enter_word");
    resultEl.className = "guess-result";
    return;
  }
  const taskId = container.dataset.taskId ?? "";
  // single-gap check against the stored answer
  const outcome = await api.clozeCheck(taskId, [guess.trim()]);
  const ok = outcome.results[0];
  resultEl.textContent = ok ? "✓" : "✗";
  resultEl.className = ok ? "guess-result correct" : "guess-result incorrect";
}
