use std::collections::BTreeSet;

use super::Cells;
use crate::error::{Error, Result};
use crate::kernel::{Chart, Point};
use crate::moves::MoveScript;
use crate::triangulation::{Polytope, Simplex};

/// A pyramid `[Q, v]` over a base polytope.
#[derive(Clone, Debug)]
pub struct PyramidContext {
    pub base: Polytope,
    pub apex: Point,
}

impl PyramidContext {
    pub fn new(base: Polytope, apex: Point) -> Result<Self> {
        apex.check_dim(base.ambient())?;
        if base.spans(&apex) {
            return Err(Error::Precondition(format!(
                "apex {apex} lies on the affine hull of the base"
            )));
        }
        Ok(PyramidContext { base, apex })
    }
}

/// Lifts a script on triangulations of the base to the pyramid: every simplex
/// gains the apex as a vertex, split points and hinges are unchanged.
pub fn pyramid_lift(script: &MoveScript, ctx: &PyramidContext) -> MoveScript {
    script.cone(&ctx.apex)
}

pub(crate) fn cell_vertices(cells: &[&Cells]) -> Vec<Point> {
    let mut v: Vec<Point> = cells
        .iter()
        .flat_map(|c| c.iter())
        .flat_map(|s| s.vertices().iter().cloned())
        .collect();
    v.sort();
    v.dedup();
    v
}

pub(crate) fn project_cells(chart: &Chart, cells: &Cells) -> Cells {
    cells.iter().map(|s| project_simplex(chart, s)).collect()
}

pub(crate) fn project_simplex(chart: &Chart, s: &Simplex) -> Simplex {
    Simplex::new_unchecked(s.vertices().iter().map(|p| chart.project(p)).collect())
}

/// Runs a full-dimensional construction in the chart of the affine hull of
/// `cells` and maps the resulting moves back.
pub(crate) fn in_chart(
    cells: &[&Cells],
    extra: &[&Point],
    f: impl FnOnce(&Chart) -> Result<MoveScript>,
) -> Result<MoveScript> {
    let mut pts = cell_vertices(cells);
    pts.extend(extra.iter().map(|p| (*p).clone()));
    let chart = Chart::of(&pts)?;
    let script = f(&chart)?;
    Ok(script.map_points(&|y: &Point| chart.lift(y)))
}

pub(crate) fn singleton(s: &Simplex) -> Cells {
    BTreeSet::from([s.clone()])
}
