import { ApiClient } from "./api.js";
import { SearchApp } from "./app.js";
import { isQueryEmpty } from "./facet-state.js";

const root = document.getElementById("app");
if (!root) throw new Error("missing #app mount point");

// Same-origin by default; set window.SKILLGREP_API to point elsewhere.
const baseUrl = (window as { SKILLGREP_API?: string }).SKILLGREP_API ?? "";
const app = new SearchApp(root, new ApiClient(baseUrl), { window });

// A shared link lands with facets already populated: run its search.
if (!isQueryEmpty(app.state)) {
  void app.runSearch();
}
