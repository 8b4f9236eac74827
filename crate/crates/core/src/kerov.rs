//! Interlacing coordinates of diagrams and their rational functions.
//!
//! An ordinary diagram is pinned down by the contents of its addable boxes
//! `x_1 < ... < x_d` and removable boxes `y_1 < ... < y_(d-1)`; the two
//! lists strictly interlace and the balance `sum(x) = sum(y)` holds. The
//! rational function
//!
//! ```text
//!   (u - y_1)...(u - y_(d-1)) / ((u - x_1)...(u - x_d))
//! ```
//!
//! has a simple pole at every addable content, and the residue there is
//! exactly the Plancherel up probability of adding that box.
//!
//! For a shifted diagram the coordinates are the removable contents and
//! the *nonzero* addable contents, and the poles move to `x(x+1)` (plus a
//! pole at zero for the content-zero box whenever it is addable — and when
//! it is not, the smallest removable content is zero and cancels that
//! pole). Substituting `u(u-1)` and multiplying by `(u-1)` turns the
//! shifted function into the ordinary function of the doubled diagram;
//! [`doubling_identity_holds`] checks that identity exactly.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::partition::{Partition, StrictPartition};
use crate::poly::{Poly, RationalFn};
use crate::rational::Rational;

/// Contents of the addable and removable boxes of an ordinary diagram,
/// both strictly increasing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrdinaryCoords {
    addable: Vec<i64>,
    removable: Vec<i64>,
}

impl OrdinaryCoords {
    /// Validates interlacing `x_1 < y_1 < x_2 < ... < x_d` and the balance
    /// condition `sum(x) = sum(y)`.
    pub fn new(addable: Vec<i64>, removable: Vec<i64>) -> Result<Self> {
        if addable.len() != removable.len() + 1 {
            return Err(Error::BadInterlacing(format!(
                "{} addable contents need {} removable, got {}",
                addable.len(),
                addable.len().max(1) - 1,
                removable.len()
            )));
        }
        for (i, &y) in removable.iter().enumerate() {
            if !(addable[i] < y && y < addable[i + 1]) {
                return Err(Error::BadInterlacing(format!(
                    "x={addable:?} and y={removable:?} do not interlace"
                )));
            }
        }
        let bx: i64 = addable.iter().sum();
        let by: i64 = removable.iter().sum();
        if bx != by {
            return Err(Error::BadInterlacing(format!(
                "sum(x) = {bx} differs from sum(y) = {by}"
            )));
        }
        Ok(OrdinaryCoords { addable, removable })
    }

    pub fn addable(&self) -> &[i64] {
        &self.addable
    }

    pub fn removable(&self) -> &[i64] {
        &self.removable
    }
}

/// Shifted-diagram coordinates: removable contents and nonzero addable
/// contents, both strictly increasing and interlacing as
/// `y_1 < x_1 < y_2 < ... < y_k < x_k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShiftedCoords {
    addable_nonzero: Vec<u64>,
    removable: Vec<u64>,
}

impl ShiftedCoords {
    pub fn addable_nonzero(&self) -> &[u64] {
        &self.addable_nonzero
    }

    pub fn removable(&self) -> &[u64] {
        &self.removable
    }
}

/// Interlacing coordinates of an ordinary diagram.
pub fn kerov_coords(p: &Partition) -> OrdinaryCoords {
    let mut addable: Vec<i64> = p.addable_cells().iter().map(|c| c.content()).collect();
    let mut removable: Vec<i64> = p.removable_cells().iter().map(|c| c.content()).collect();
    addable.reverse();
    removable.reverse();
    OrdinaryCoords::new(addable, removable).expect("diagram coordinates always interlace")
}

/// Reconstructs the unique diagram with the given coordinates.
pub fn diagram_from_coords(coords: &OrdinaryCoords) -> Result<Partition> {
    let x = &coords.addable;
    let y = &coords.removable;
    let k = y.len();
    if k == 0 {
        // Only the empty diagram has a single addable corner; balance
        // forces its content to zero, which OrdinaryCoords validated.
        return Ok(Partition::empty());
    }
    // Distinct part values v_1 > ... > v_k with cumulative row counts R_t,
    // read off corner contents: removable v_t - R_t, addable v_(t+1) - R_t.
    let mut values = vec![0i64; k];
    let mut cum_rows = vec![0i64; k];
    values[0] = x[k];
    for t in 1..=k {
        cum_rows[t - 1] = values[t - 1] - y[k - t];
        if t < k {
            values[t] = x[k - t] + cum_rows[t - 1];
        }
    }
    let bad = || Error::BadInterlacing(format!("x={x:?}, y={y:?} match no diagram"));
    if cum_rows[k - 1] != -x[0] {
        return Err(bad());
    }
    let mut parts = Vec::new();
    let mut prev_rows = 0i64;
    for t in 0..k {
        let mult = cum_rows[t] - prev_rows;
        if values[t] < 1 || mult < 1 {
            return Err(bad());
        }
        for _ in 0..mult {
            parts.push(values[t] as u32);
        }
        prev_rows = cum_rows[t];
    }
    let candidate = Partition::new(parts);
    if &kerov_coords(&candidate) == coords {
        Ok(candidate)
    } else {
        Err(bad())
    }
}

/// Coordinates of a shifted diagram. The content-zero addable box, when
/// present, is deliberately left out of the addable list.
pub fn shifted_kerov_coords(s: &StrictPartition) -> ShiftedCoords {
    let mut addable_nonzero: Vec<u64> = s
        .shifted_addable_cells()
        .iter()
        .map(|c| c.content() as u64)
        .filter(|&c| c != 0)
        .collect();
    let mut removable: Vec<u64> = s
        .shifted_removable_cells()
        .iter()
        .map(|c| c.content() as u64)
        .collect();
    addable_nonzero.reverse();
    removable.reverse();
    debug_assert_eq!(addable_nonzero.len(), removable.len());
    debug_assert!(removable
        .iter()
        .zip(&addable_nonzero)
        .all(|(&y, &x)| y < x));
    ShiftedCoords {
        addable_nonzero,
        removable,
    }
}

fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

/// The rational function of an ordinary diagram,
/// `prod(u - removable) / prod(u - addable)`.
pub fn up_function(p: &Partition) -> RationalFn {
    let coords = kerov_coords(p);
    let num = Poly::from_roots(coords.removable().iter().map(|&y| int(y)));
    let den = Poly::from_roots(coords.addable().iter().map(|&x| int(x)));
    let f = RationalFn::new(num, den);
    debug_assert_eq!(f.den().degree(), Some(coords.addable().len()));
    f
}

/// The rational function of a shifted diagram,
/// `prod(v - y(y+1)) / (v * prod(v - x(x+1)))`.
pub fn shifted_up_function(s: &StrictPartition) -> RationalFn {
    let coords = shifted_kerov_coords(s);
    let pole = |c: u64| Rational::from_integer(BigInt::from(u128::from(c) * (u128::from(c) + 1)));
    let num = Poly::from_roots(coords.removable().iter().map(|&y| pole(y)));
    let den = &Poly::var() * &Poly::from_roots(coords.addable_nonzero().iter().map(|&x| pole(x)));
    RationalFn::new(num, den)
}

/// Both sides of the doubling identity for `lam`: substituting `u(u-1)`
/// into the shifted function and multiplying by `(u-1)` versus the
/// ordinary function of the doubled diagram.
pub fn doubling_identity_sides(lam: &StrictPartition) -> (RationalFn, RationalFn) {
    let quadratic = Poly::new(vec![Rational::zero(), -Rational::one(), Rational::one()]);
    let linear = Poly::new(vec![-Rational::one(), Rational::one()]);
    let lhs = shifted_up_function(lam)
        .compose_poly(&quadratic)
        .mul_poly(&linear);
    let rhs = up_function(&lam.double());
    (lhs, rhs)
}

/// Exact check of the doubling identity by cross multiplication.
pub fn doubling_identity_holds(lam: &StrictPartition) -> bool {
    let (lhs, rhs) = doubling_identity_sides(lam);
    lhs.eq_cross_mul(&rhs)
}
