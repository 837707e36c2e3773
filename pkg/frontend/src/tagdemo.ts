/** Tagging demo: a text box and the token table the service returns. */

import { TagRow } from "./api.js";

const COLUMNS: Array<keyof TagRow> = [
  "index", "token", "position", "lemma", "basic", "rich", "mutation", "sem",
];

export function renderTagTable(container: HTMLElement, rows: TagRow[]): void {
  container.innerHTML = "";
  const table = document.createElement("table");
  table.className = "tag-table";
  const head = document.createElement("tr");
  for (const col of COLUMNS) {
    const th = document.createElement("th");
    th.textContent = col;
    head.appendChild(th);
  }
  table.appendChild(head);
  for (const row of rows) {
    const tr = document.createElement("tr");
    for (const col of COLUMNS) {
      const td = document.createElement("td");
      td.textContent = String(row[col]);
      tr.appendChild(td);
    }
    table.appendChild(tr);
  }
  container.appendChild(table);
}
