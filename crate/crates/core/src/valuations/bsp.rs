use num_traits::{One, Zero};

use super::extend::extend;
use super::{GroupValue, Valuation};
use crate::error::{Error, Result};
use crate::kernel::{for_each_combination, Hyperplane, Point, Rational};
use crate::triangulation::{star_polytope, Polyhedron, Polytope, Simplex};

/// A binary space partition of a polytope down to simplices.
#[derive(Clone, Debug)]
pub enum BspNode {
    Leaf(Simplex),
    Inner {
        cut: Hyperplane,
        plus: Box<BspNode>,
        minus: Box<BspNode>,
        /// The polytope's slice by `cut`.
        section: Polytope,
    },
}

impl BspNode {
    pub fn leaves(&self) -> Vec<&Simplex> {
        match self {
            BspNode::Leaf(s) => vec![s],
            BspNode::Inner { plus, minus, .. } => {
                let mut v = plus.leaves();
                v.extend(minus.leaves());
                v
            }
        }
    }

    pub fn inner_nodes(&self) -> usize {
        match self {
            BspNode::Leaf(_) => 0,
            BspNode::Inner { plus, minus, .. } => 1 + plus.inner_nodes() + minus.inner_nodes(),
        }
    }

    /// `mu` evaluated through the tree: leaves directly, and at every inner
    /// node `mu(P) = mu(P+) + mu(P-) - mu(P ∩ H)` with the section extended by
    /// inclusion-exclusion.
    pub fn evaluate(&self, mu: &Valuation) -> Result<GroupValue> {
        match self {
            BspNode::Leaf(s) => mu.evaluate(s),
            BspNode::Inner {
                plus,
                minus,
                section,
                ..
            } => {
                let sec = extend(mu, &Polyhedron::new(vec![section.clone()])?)?;
                Ok(&(&plus.evaluate(mu)? + &minus.evaluate(mu)?) - &sec)
            }
        }
    }
}

/// Hyperplanes spanned by vertices of `p` with vertices strictly on both
/// sides, in canonical order.
fn spanned_cuts(p: &Polytope) -> Vec<Hyperplane> {
    let vs = p.vertices();
    let mut hs = Vec::new();
    for_each_combination(vs.len(), p.dim(), |idx| {
        let pts: Vec<Point> = idx.iter().map(|&i| vs[i].clone()).collect();
        if let Ok(h) = Hyperplane::through(&pts) {
            hs.push(h);
        }
    });
    hs.sort();
    hs.dedup();
    hs.retain(|h| p.cut(h).is_some());
    hs
}

/// A hyperplane strictly separating the least vertex of `p` from the others.
/// Its normal is the sum of the outer normals of the facets at that vertex.
fn vertex_figure_cut(p: &Polytope) -> Result<Hyperplane> {
    let v = &p.vertices()[0];
    let inside = p.vertex_barycenter();
    let n = p.ambient();
    let mut normal = vec![Rational::zero(); n];
    for f in p.facets().iter().filter(|f| f.vertices().contains(v)) {
        let h = Hyperplane::through(f.vertices())?;
        let outward = if h.side(&inside) < 0 { Rational::one() } else { -Rational::one() };
        for (a, b) in normal.iter_mut().zip(h.normal()) {
            *a += b * &outward;
        }
    }
    let dot = |x: &Point| -> Rational {
        normal
            .iter()
            .zip(x.coords())
            .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
    };
    let top = dot(v);
    let next = p.vertices()[1..]
        .iter()
        .map(dot)
        .max()
        .ok_or_else(|| Error::Internal("polytope with one vertex".into()))?;
    if next >= top {
        return Err(Error::Internal(format!("no separating direction at {v}")));
    }
    Hyperplane::new(normal, (top + next) / crate::kernel::int(2))
}

/// A binary space partition of the full-dimensional `p` into simplices.
pub fn tverberg_bsp(p: &Polytope) -> Result<BspNode> {
    tverberg_bsp_with_budget(p, 10_000)
}

/// As [`tverberg_bsp`], failing once more than `budget` nodes are built.
///
/// A region that is not a simplex is cut by the least hyperplane spanned by
/// its vertices that leaves both pieces with fewer vertices, so the depth is
/// bounded by the vertex count; when there is none, by a hyperplane cutting
/// off its least vertex.
pub fn tverberg_bsp_with_budget(p: &Polytope, budget: usize) -> Result<BspNode> {
    if p.dim() != p.ambient() {
        return Err(Error::Span {
            expected: p.ambient(),
            found: p.dim(),
        });
    }
    let mut used = 0;
    build(p, budget, &mut used)
}

fn build(p: &Polytope, budget: usize, used: &mut usize) -> Result<BspNode> {
    *used += 1;
    if *used > budget {
        return Err(Error::Budget(budget));
    }
    if let Some(s) = p.as_simplex() {
        return Ok(BspNode::Leaf(s));
    }
    let m = p.vertices().len();
    let greedy = spanned_cuts(p).into_iter().find_map(|h| {
        let cut = p.cut(&h)?;
        (cut.plus.vertices().len() < m && cut.minus.vertices().len() < m).then_some((h, cut))
    });
    let (h, cut) = match greedy {
        Some(found) => found,
        None => {
            let h = vertex_figure_cut(p)?;
            let cut = p
                .cut(&h)
                .ok_or_else(|| Error::Internal("vertex figure cut is empty".into()))?;
            (h, cut)
        }
    };
    let plus = build(&cut.plus, budget, used)?;
    let minus = build(&cut.minus, budget, used)?;
    Ok(BspNode::Inner {
        cut: h,
        plus: Box::new(plus),
        minus: Box::new(minus),
        section: cut.section,
    })
}

/// Whether evaluating `mu` on `p` through its BSP agrees with extending it
/// over the starring of `p` at its vertex barycenter.
pub fn corollary3_uniqueness_check(mu: &Valuation, p: &Polytope) -> Result<bool> {
    let tree = tverberg_bsp(p)?;
    let star = star_polytope(p, &p.vertex_barycenter())?;
    let direct = extend(mu, &Polyhedron::from_triangulation(&star))?;
    Ok(tree.evaluate(mu)? == direct)
}
