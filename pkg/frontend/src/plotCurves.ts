/** CLI: render a sweep CSV as line curves against a chosen x column.
 *
 * Usage: node dist/plotCurves.js --in doppler.csv --out doppler.svg --x v
 */

import { emit, loadTable, parseArgs, runMain } from "./cliCommon.js";
import { renderCurves } from "./curves.js";

runMain(() => {
  const options = parseArgs(process.argv.slice(2), ["--x"]);
  const xColumn = options.extra.get("--x");
  if (!xColumn) {
    throw new Error("missing required flag --x COLUMN");
  }
  emit(renderCurves(loadTable(options.input), xColumn), options.output);
});
