//! Valuations on simplices and their extension to polyhedra.
//!
//! A [`Valuation`] assigns a [`GroupValue`] to every simplex of dimension at
//! most `max_dim`. [`extend`] evaluates it on a polyhedron by
//! inclusion-exclusion over a triangulation, [`check_move_invariance`] tests
//! that an elementary move leaves that sum unchanged, and
//! [`corollary3_uniqueness_check`] compares against an evaluation driven by a
//! binary space partition.

mod bsp;
mod extend;

use std::fmt;
use std::ops::{Add, AddAssign, Neg, Sub};
use std::sync::Arc;

use num_traits::Zero;
use serde::{Serialize, Serializer};

pub use bsp::{corollary3_uniqueness_check, tverberg_bsp, tverberg_bsp_with_budget, BspNode};
pub use extend::{check_move_invariance, extend, extend_triangulation, InvarianceChecker};

use crate::error::{Error, Result};
use crate::kernel::{format_rational, int, Rational};
use crate::triangulation::Simplex;

/// An element of `Q^k`; scalars have `k = 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupValue(Vec<Rational>);

impl GroupValue {
    pub fn zero(width: usize) -> Self {
        GroupValue(vec![Rational::zero(); width])
    }

    pub fn scalar(x: Rational) -> Self {
        GroupValue(vec![x])
    }

    pub fn vector(v: Vec<Rational>) -> Self {
        GroupValue(v)
    }

    pub fn width(&self) -> usize {
        self.0.len()
    }

    pub fn components(&self) -> &[Rational] {
        &self.0
    }

    pub fn as_scalar(&self) -> Option<&Rational> {
        match self.0.as_slice() {
            [x] => Some(x),
            _ => None,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    /// `k` times this value.
    pub fn times(&self, k: i64) -> Self {
        let k = int(k);
        GroupValue(self.0.iter().map(|x| x * &k).collect())
    }
}

impl Add<&GroupValue> for &GroupValue {
    type Output = GroupValue;
    fn add(self, rhs: &GroupValue) -> GroupValue {
        assert_eq!(self.width(), rhs.width(), "group values of different widths");
        GroupValue(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl AddAssign<&GroupValue> for GroupValue {
    fn add_assign(&mut self, rhs: &GroupValue) {
        assert_eq!(self.width(), rhs.width(), "group values of different widths");
        for (a, b) in self.0.iter_mut().zip(&rhs.0) {
            *a += b;
        }
    }
}

impl Neg for &GroupValue {
    type Output = GroupValue;
    fn neg(self) -> GroupValue {
        GroupValue(self.0.iter().map(|a| -a).collect())
    }
}

impl Sub<&GroupValue> for &GroupValue {
    type Output = GroupValue;
    fn sub(self, rhs: &GroupValue) -> GroupValue {
        self + &-rhs
    }
}

impl fmt::Display for GroupValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.as_scalar() {
            Some(x) => write!(f, "{}", format_rational(x)),
            None => {
                let parts: Vec<String> = self.0.iter().map(format_rational).collect();
                write!(f, "[{}]", parts.join(", "))
            }
        }
    }
}

/// Scalars serialize as `"p/q"`, vectors as arrays of such strings.
impl Serialize for GroupValue {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self.as_scalar() {
            Some(x) => s.serialize_str(&format_rational(x)),
            None => {
                let parts: Vec<String> = self.0.iter().map(format_rational).collect();
                parts.serialize(s)
            }
        }
    }
}

type Eval = dyn Fn(&Simplex) -> Result<GroupValue> + Send + Sync;

/// A function on simplices of dimension at most `max_dim` with values in
/// `Q^width`.
#[derive(Clone)]
pub struct Valuation {
    name: String,
    max_dim: usize,
    width: usize,
    eval: Arc<Eval>,
}

impl fmt::Debug for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Valuation")
            .field("name", &self.name)
            .field("max_dim", &self.max_dim)
            .field("width", &self.width)
            .finish()
    }
}

impl Valuation {
    pub fn new(
        name: impl Into<String>,
        max_dim: usize,
        width: usize,
        eval: impl Fn(&Simplex) -> Result<GroupValue> + Send + Sync + 'static,
    ) -> Self {
        Valuation {
            name: name.into(),
            max_dim,
            width,
            eval: Arc::new(eval),
        }
    }

    /// A scalar valuation from a rational-valued function.
    pub fn scalar(
        name: impl Into<String>,
        max_dim: usize,
        f: impl Fn(&Simplex) -> Result<Rational> + Send + Sync + 'static,
    ) -> Self {
        Valuation::new(name, max_dim, 1, move |s| f(s).map(GroupValue::scalar))
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn max_dim(&self) -> usize {
        self.max_dim
    }

    pub fn width(&self) -> usize {
        self.width
    }

    /// The value of the empty set.
    pub fn zero(&self) -> GroupValue {
        GroupValue::zero(self.width)
    }

    pub fn evaluate(&self, s: &Simplex) -> Result<GroupValue> {
        if s.dim() > self.max_dim {
            return Err(Error::DimensionMismatch {
                expected: self.max_dim,
                found: s.dim(),
            });
        }
        let v = (self.eval)(s)?;
        if v.width() != self.width {
            return Err(Error::Internal(format!("{} returned a value of the wrong width", self.name)));
        }
        Ok(v)
    }
}

/// `n`-dimensional volume, exact whenever it is rational.
fn top_volume(s: &Simplex) -> Result<Rational> {
    if s.dim() == s.ambient() {
        return s.volume();
    }
    s.volume_recursive()
        .ok_or_else(|| Error::Unsupported(format!("volume of {s} is irrational")))
}

/// Volume of `n`-simplices, zero below dimension `n`.
pub fn builtin_volume(n: usize) -> Valuation {
    Valuation::scalar("volume", n, move |s| {
        if s.dim() == n {
            top_volume(s)
        } else {
            Ok(Rational::zero())
        }
    })
}

/// One on every nonempty simplex: the Euler characteristic.
pub fn builtin_euler(n: usize) -> Valuation {
    Valuation::scalar("euler", n, |_| Ok(int(1)))
}

/// The integral of the `axis` coordinate over `n`-simplices, zero below.
pub fn builtin_moment(n: usize, axis: usize) -> Valuation {
    Valuation::scalar(format!("moment:{axis}"), n, move |s| {
        if axis >= s.ambient() {
            return Err(Error::Precondition(format!(
                "axis {axis} out of range in dimension {}",
                s.ambient()
            )));
        }
        if s.dim() != n {
            return Ok(Rational::zero());
        }
        let mean: Rational = s
            .vertices()
            .iter()
            .fold(Rational::zero(), |acc, v| acc + &v.coords()[axis])
            / int(s.vertices().len() as i64);
        Ok(top_volume(s)? * mean)
    })
}

/// Volume plus the extent along the first axis plus the Euler characteristic.
/// Each summand is a valuation; the last two are nonzero on lower-dimensional
/// simplices, which exercises the lower-dimensional terms of the extension.
pub fn builtin_mixed(n: usize) -> Valuation {
    Valuation::scalar("mixed", n, move |s| {
        let xs = s.vertices().iter().map(|v| &v.coords()[0]);
        let lo = xs.clone().min().expect("simplices are nonempty");
        let hi = xs.max().expect("simplices are nonempty");
        let vol = if s.dim() == n {
            top_volume(s)?
        } else {
            Rational::zero()
        };
        Ok(vol + (hi - lo) + int(1))
    })
}

/// The square of the volume. Not additive; used as a negative control.
pub fn squared_volume(n: usize) -> Valuation {
    Valuation::scalar("volume-squared", n, move |s| {
        if s.dim() == n {
            let v = top_volume(s)?;
            Ok(&v * &v)
        } else {
            Ok(Rational::zero())
        }
    })
}

/// The valuation named `name` on simplices of dimension at most `n`:
/// `volume`, `euler`, `moment:<axis>`, `mixed` or `volume-squared`.
pub fn builtin(name: &str, n: usize) -> Result<Valuation> {
    match name {
        "volume" => Ok(builtin_volume(n)),
        "euler" => Ok(builtin_euler(n)),
        "mixed" => Ok(builtin_mixed(n)),
        "volume-squared" => Ok(squared_volume(n)),
        _ => match name.strip_prefix("moment:") {
            Some(axis) => {
                let axis: usize = axis
                    .parse()
                    .map_err(|_| Error::Parse(format!("invalid moment axis {axis:?}")))?;
                Ok(builtin_moment(n, axis))
            }
            None => Err(Error::Parse(format!("unknown valuation {name:?}"))),
        },
    }
}

/// The builtin valuations that are genuine valuations in ambient dimension `n`.
pub fn builtins(n: usize) -> Vec<Valuation> {
    let mut v = vec![builtin_volume(n), builtin_euler(n)];
    v.extend((0..n).map(|axis| builtin_moment(n, axis)));
    v.push(builtin_mixed(n));
    v
}
