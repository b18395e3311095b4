/** Parsing for the numeric CSV tables emitted by the qlorentz CLI. */

export interface Table {
  columns: string[];
  rows: number[][];
}

/**
 * Parse a header+rows CSV of plain numbers (no quoting, LF or CRLF endings).
 * Throws on an empty body, ragged rows, or non-numeric cells.
 */
export function parseCsv(text: string): Table {
  const lines = text
    .split(/\r?\n/)
    .map((line) => line.trim())
    .filter((line) => line.length > 0);
  if (lines.length === 0) {
    throw new Error("CSV is empty");
  }
  const columns = lines[0].split(",").map((c) => c.trim());
  if (columns.some((c) => c.length === 0)) {
    throw new Error("CSV header has an empty column name");
  }
  if (lines.length === 1) {
    throw new Error("CSV has a header but no data rows");
  }
  const rows: number[][] = [];
  for (let i = 1; i < lines.length; i++) {
    const cells = lines[i].split(",");
    if (cells.length !== columns.length) {
      throw new Error(
        `row ${i} has ${cells.length} cells, expected ${columns.length}`,
      );
    }
    const row = cells.map((cell) => {
      const value = Number(cell);
      if (!Number.isFinite(value)) {
        throw new Error(`row ${i} has a non-numeric cell: ${JSON.stringify(cell)}`);
      }
      return value;
    });
    rows.push(row);
  }
  return { columns, rows };
}

/** Assert the header is exactly the expected list (order included). */
export function requireHeader(table: Table, expected: string[]): void {
  const got = table.columns.join(",");
  const want = expected.join(",");
  if (got !== want) {
    throw new Error(`unexpected CSV header: got "${got}", expected "${want}"`);
  }
}

export function column(table: Table, name: string): number[] {
  const idx = table.columns.indexOf(name);
  if (idx < 0) {
    throw new Error(`CSV has no column named "${name}"`);
  }
  return table.rows.map((row) => row[idx]);
}
