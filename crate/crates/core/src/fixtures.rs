//! Named reference graphs used as test anchors and documentation examples.
//!
//! | name       | shape                                                   | stores |
//! |------------|---------------------------------------------------------|--------|
//! | `FIX-T3`   | unit triangle                                           | {2}    |
//! | `FIX-F4`   | unit square 0-1-2-3 with chord (0,2)                    | {3}    |
//! | `FIX-H6`   | unit hexagon fanned from 0: chords (0,2),(0,3),(0,4)    | {5}    |
//! | `FIX-8FAN` | unit octagon, chords (0,2),(2,4),(2,7),(4,6),(4,7)      | {6}    |
//!
//! `FIX-8FAN` glues the fans of vertices 2 and 4; a query from 1 to 5 crosses
//! both and exercises every stage of path reporting.

use crate::engine::Engine;
use crate::error::{Error, Result};
use crate::graph::{BeerGraph, VertexId};
use crate::weight::Weight;

pub const NAMES: [&str; 4] = ["FIX-T3", "FIX-F4", "FIX-H6", "FIX-8FAN"];

const T3: &[(VertexId, VertexId)] = &[(0, 1), (1, 2), (0, 2)];
const F4: &[(VertexId, VertexId)] = &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)];
const H6: &[(VertexId, VertexId)] = &[
    (0, 1),
    (1, 2),
    (2, 3),
    (3, 4),
    (4, 5),
    (5, 0),
    (0, 2),
    (0, 3),
    (0, 4),
];
const FAN8: &[(VertexId, VertexId)] = &[
    (0, 1),
    (1, 2),
    (2, 3),
    (3, 4),
    (4, 5),
    (5, 6),
    (6, 7),
    (7, 0),
    (0, 2),
    (2, 4),
    (2, 7),
    (4, 6),
    (4, 7),
];

fn definition(name: &str) -> Option<(usize, &'static [(VertexId, VertexId)], VertexId)> {
    match name {
        "FIX-T3" => Some((3, T3, 2)),
        "FIX-F4" => Some((4, F4, 3)),
        "FIX-H6" => Some((6, H6, 5)),
        "FIX-8FAN" => Some((8, FAN8, 6)),
        _ => None,
    }
}

pub fn fixture(name: &str) -> Result<BeerGraph> {
    let (n, edges, store) = definition(name).ok_or_else(|| Error::UnknownFixture(name.into()))?;
    BeerGraph::new(
        n,
        edges.iter().map(|&(a, b)| (a, b, Weight::raw(1.0))),
        [store],
    )
}

/// The fixture as a graph file, edges in their documented order.
pub fn emit_fixture(name: &str) -> Result<String> {
    let (_, edges, _) = definition(name).ok_or_else(|| Error::UnknownFixture(name.into()))?;
    fixture(name)?.to_json_ordered(Some(edges))
}

pub fn fix_t3() -> BeerGraph {
    fixture("FIX-T3").expect("fixture")
}

pub fn fix_f4() -> BeerGraph {
    fixture("FIX-F4").expect("fixture")
}

pub fn fix_h6() -> BeerGraph {
    fixture("FIX-H6").expect("fixture")
}

pub fn fix_8fan() -> BeerGraph {
    fixture("FIX-8FAN").expect("fixture")
}

/// A worked end-to-end beer-path query on a fixture: normalization, the
/// dual tree, the face-pair summary between the endpoints' faces, the column
/// DAG with its dynamic-programming values, and the reported walk.
///
/// The text is deterministic and is kept as a golden file.
pub fn trace(name: &str, s: VertexId, t: VertexId) -> Result<String> {
    let g = fixture(name)?;
    let e = Engine::new(&g)?;
    let mut out = String::new();
    let mut line = |text: String| {
        out.push_str(&text);
        out.push('\n');
    };
    let stores: Vec<String> = g.beer_stores().map(|b| b.to_string()).collect();
    line(format!(
        "fixture {name}: n={} edges={} stores={{{}}}",
        g.n(),
        g.edge_count(),
        stores.join(",")
    ));
    line(format!("query {s} -> {t}"));

    let norm = e.normalized();
    line(format!(
        "normalize: {} edges added, {} weights lowered",
        norm.added_edges().len(),
        norm.relaxed_count()
    ));

    let d = e.dual();
    line(format!(
        "dual: {} faces, root F{}",
        d.face_count(),
        d.root()
    ));
    for (f, face) in d.faces().iter().enumerate() {
        let [a, b, c] = face.vertices;
        let parent = d
            .index()
            .parent(f)
            .map_or("-".to_string(), |p| format!("F{p}"));
        line(format!("  F{f} = ({a},{b},{c}) parent {parent}"));
    }
    for v in [s, t] {
        let (lo, hi) = d.path_ends(v);
        line(format!(
            "P_{v}: F{lo} .. F{hi}, face_of({v}) = F{}",
            d.face_of(v)
        ));
    }

    let (fs, ft) = (d.face_of(s), d.face_of(t));
    if fs != ft {
        let q = e.oracle().summary(fs, ft)?;
        let (vs, vt) = (d.face(fs).vertices, d.face(ft).vertices);
        line(format!("Q(F{fs},F{ft}) ({} quantities):", 2 * 9));
        for (i, &x) in vs.iter().enumerate() {
            let row = |m: &[[Weight; 3]; 3]| {
                (0..3)
                    .map(|j| format!("{}:{}", vt[j], m[i][j]))
                    .collect::<Vec<_>>()
                    .join(" ")
            };
            line(format!(
                "  from {x}: dist {} | beer {}",
                row(&q.dist),
                row(&q.beer)
            ));
        }
    }
    let (dist, beer) = e.oracle().query(s, t)?;
    line(format!("dist({s},{t}) = {dist}, dist_B({s},{t}) = {beer}"));

    if e.in_same_fan(s, t)? {
        line(format!(
            "{t} lies in the fan of {s}: answered from the base tables"
        ));
    } else {
        let dag = e.build_dag(s, t)?;
        line(format!(
            "DAG H: {} columns, {} edges",
            dag.column_count(),
            dag.edge_count()
        ));
        for (i, col) in dag.columns().enumerate() {
            let cells: Vec<String> = col
                .iter()
                .enumerate()
                .map(|(k, v)| {
                    format!(
                        "{v} (dist {}, beer {})",
                        dag.dist(i, k),
                        dag.beer_dist(i, k)
                    )
                })
                .collect();
            let fan = if i + 1 < dag.column_count() {
                format!(" -> fan of {}", dag.fan(i))
            } else {
                String::new()
            };
            line(format!("  C{i}: {}{fan}", cells.join(", ")));
        }
        for (from, to, kind, fan) in dag.best_path() {
            line(format!("  step {from} -> {to} {kind:?} in fan of {fan}"));
        }
    }
    let path = e.query_beer_path(s, t)?;
    line(format!("walk: {path} (weight {})", path.weight));
    Ok(out)
}
