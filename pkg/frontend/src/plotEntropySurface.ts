/** CLI: render the spin-entropy sweep CSV as a heatmap SVG.
 *
 * Usage: node dist/plotEntropySurface.js --in entropy.csv --out entropy.svg
 */

import { emit, loadTable, parseArgs, runMain } from "./cliCommon.js";
import { renderEntropySurface } from "./entropySurface.js";

runMain(() => {
  const options = parseArgs(process.argv.slice(2));
  emit(renderEntropySurface(loadTable(options.input)), options.output);
});
