// Build the bindings first (see README): wasm-bindgen --target web --out-dir crates/demo/www/pkg ...
import init, { poset_view, shift_sites_view, cone_polynomials } from "./pkg/conetutte_demo.js";

const SVG = "http://www.w3.org/2000/svg";
const $ = (id) => document.getElementById(id);

let current = null;

function svgEl(name, attrs) {
  const el = document.createElementNS(SVG, name);
  for (const [k, v] of Object.entries(attrs)) el.setAttribute(k, v);
  return el;
}

// Layered layout: one row per leaf count, fewest leaves at the bottom.
function layout(view, width, height) {
  const levels = new Map();
  for (const node of view.nodes) {
    if (!levels.has(node.leaves)) levels.set(node.leaves, []);
    levels.get(node.leaves).push(node.index);
  }
  const keys = [...levels.keys()].sort((a, b) => a - b);
  const pos = new Map();
  keys.forEach((leaves, row) => {
    const members = levels.get(leaves);
    const y = height - 30 - (row * (height - 60)) / Math.max(1, keys.length - 1);
    members.forEach((idx, col) => {
      pos.set(idx, { x: ((col + 1) * width) / (members.length + 1), y });
    });
  });
  return pos;
}

function drawPoset() {
  const n = Number($("n").value);
  const view = JSON.parse(poset_view(n));
  const svg = $("hasse");
  svg.replaceChildren();
  if (view.error) {
    $("poset-info").innerHTML = `<span class="error">${view.error}</span>`;
    return;
  }
  current = view;
  $("poset-info").textContent = `${view.nodes.length} trees, ${view.covers.length} cover relations`;
  const pos = layout(view, Number(svg.getAttribute("width")), Number(svg.getAttribute("height")));
  for (const [lo, hi] of view.covers) {
    const a = pos.get(lo), b = pos.get(hi);
    svg.append(svgEl("line", { x1: a.x, y1: a.y, x2: b.x, y2: b.y }));
  }
  for (const node of view.nodes) {
    const p = pos.get(node.index);
    const c = svgEl("circle", { cx: p.x, cy: p.y, r: 9, "data-index": node.index });
    c.addEventListener("click", () => selectNode(node.index));
    svg.append(c);
    const label = svgEl("text", { x: p.x - 4, y: p.y + 3 });
    label.textContent = node.index;
    svg.append(label);
  }
  selectNode(view.minimal[0]);
}

function selectNode(index) {
  const node = current.nodes[index];
  for (const c of $("hasse").querySelectorAll("circle")) {
    c.classList.toggle("selected", Number(c.dataset.index) === index);
  }
  const edges = node.edges.map(([u, v]) => `${u}-${v}`).join(" ");
  $("node-info").innerHTML =
    `<p><b>tree ${index}</b> <code>${node.code}</code><br>leaves: ${node.leaves}<br>edges: ${edges}</p>` +
    `<p>f(T) = <code>${node.f.text}</code></p>`;
  const view = JSON.parse(shift_sites_view(current.n, index));
  if (view.error) {
    $("sites").innerHTML = `<span class="error">${view.error}</span>`;
    return;
  }
  const rows = view.sites.map((s) => `<tr>
      <td>${s.v1}&ndash;${s.vk}</td><td>${s.k}</td><td>${s.h1_vertices} / ${s.h2_vertices}</td>
      <td>${s.trivial ? "same tree" : "tree " + s.image}</td>
      <td><code>${s.difference}</code></td><td><code>${s.product}</code></td>
      <td class="${s.holds ? "ok" : "error"}">${s.holds ? "yes" : "NO"}</td></tr>`);
  $("sites").innerHTML = `<table><tr><th>site</th><th>k</th><th>|H1| / |H2|</th><th>shift image</th>
      <th>f(T) &minus; f(T')</th><th>y&middot;g(H1)&middot;g(H2)&middot;g(P<sub>k</sub>)</th><th>equal</th></tr>
      ${rows.join("")}</table>`;
}

function computePolys() {
  const out = JSON.parse(cone_polynomials($("edges").value, Number($("vertex").value)));
  if (out.error) {
    $("polys").innerHTML = `<span class="error">${out.error}</span>`;
    return;
  }
  $("polys").textContent = [
    `|V| = ${out.vertices}, |E| = ${out.edges}`,
    `T(1,y)  = ${out.tutte.text}`,
    `f(G)    = ${out.f.text}`,
    `g_v(G)  = ${out.g.text}`,
    `h_v(G)  = ${out.h.text}`,
    `f = g + h: ${out.f_equals_g_plus_h}`,
    `spanning trees of Cone(G): ${out.cone_spanning_trees}`,
  ].join("\n");
}

await init();
$("draw").addEventListener("click", drawPoset);
$("compute").addEventListener("click", computePolys);
drawPoset();
computePolys();
