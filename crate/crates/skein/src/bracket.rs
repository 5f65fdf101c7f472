//! Kauffman bracket evaluation.
//!
//! A diagram word reduces to a linear combination of embedded multicurves
//! over the coefficient ring: each crossing is smoothed two ways,
//!
//! * `over p`  contributes `A^-1 * (wires kept) + A * (cap p, cup p)`,
//! * `under p` contributes `A * (wires kept) + A^-1 * (cap p, cup p)`,
//!
//! and every trivial circle in a fully smoothed state contributes the factor
//! delta = -A^2 - A^-2. The memoized reducer and the literal state-sum
//! enumeration implement the same sum independently; both are exposed so one
//! can check the other.

use crate::ring::Coeff;
use crate::surface::{trace, Column, DiagramWord, Multicurve, SurfaceSpec};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use thiserror::Error;

/// Default ceiling on crossings per diagram; reduction cost is bounded by
/// 2^crossings states.
pub const DEFAULT_MAX_CROSSINGS: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BracketError {
    #[error("diagram has {count} crossings, limit {max}")]
    TooManyCrossings { count: usize, max: usize },
}

/// A finite linear combination of multicurves with coefficients in `R`.
///
/// Invariant: stored coefficients are nonzero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkeinVector<R: Coeff> {
    terms: BTreeMap<Multicurve, R>,
}

impl<R: Coeff> SkeinVector<R> {
    pub fn zero() -> Self {
        SkeinVector { terms: BTreeMap::new() }
    }

    /// The single basis element `1 * mc`.
    pub fn basis(mc: Multicurve) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(mc, R::one());
        SkeinVector { terms }
    }

    pub fn from_terms(pairs: Vec<(Multicurve, R)>) -> Self {
        let mut v = Self::zero();
        for (mc, c) in pairs {
            v.add_term(mc, c);
        }
        v
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Coefficient of `mc` (zero if absent).
    pub fn coeff(&self, mc: &Multicurve) -> R {
        self.terms.get(mc).cloned().unwrap_or_else(R::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Multicurve, &R)> {
        self.terms.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &Multicurve> {
        self.terms.keys()
    }

    fn add_term(&mut self, mc: Multicurve, c: R) {
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&mc) {
            None => {
                self.terms.insert(mc, c);
            }
            Some(old) => {
                let sum = old.add(&c);
                if !sum.is_zero() {
                    self.terms.insert(mc, sum);
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (mc, c) in &other.terms {
            out.add_term(mc.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&R::one().neg()))
    }

    pub fn scale(&self, k: &R) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        let mut out = Self::zero();
        for (mc, c) in &self.terms {
            out.add_term(mc.clone(), c.mul(k));
        }
        out
    }

    /// Applies a ring map to every coefficient.
    pub fn map<S: Coeff>(&self, f: impl Fn(&R) -> S) -> SkeinVector<S> {
        let mut out = SkeinVector::zero();
        for (mc, c) in &self.terms {
            out.add_term(mc.clone(), f(c));
        }
        out
    }
}

impl<R: Coeff> fmt::Display for SkeinVector<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (mc, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{} * {}", c, mc)?;
        }
        Ok(())
    }
}

/// delta^k in `R`.
pub fn delta_power<R: Coeff>(k: usize) -> R {
    let d = R::delta();
    let mut acc = R::one();
    for _ in 0..k {
        acc = acc.mul(&d);
    }
    acc
}

/// Order in which remaining crossings are smoothed. The bracket value is
/// independent of the choice; exposing it lets tests check exactly that.
#[derive(Debug, Clone)]
pub enum CrossingOrder {
    /// Always smooth the leftmost remaining crossing.
    First,
    /// Pick uniformly at random, seeded for reproducibility.
    Random(u64),
}

/// Memoized bracket reducer. Smoothing branches share subdiagrams, so states
/// are cached per `reduce` call, keyed by the column sequence.
pub struct Reducer<R: Coeff> {
    order: CrossingOrder,
    max_crossings: usize,
    rng: Option<ChaCha8Rng>,
    _marker: std::marker::PhantomData<R>,
}

impl<R: Coeff> Reducer<R> {
    pub fn new(order: CrossingOrder) -> Self {
        let rng = match order {
            CrossingOrder::Random(seed) => Some(ChaCha8Rng::seed_from_u64(seed)),
            CrossingOrder::First => None,
        };
        Reducer { order, max_crossings: DEFAULT_MAX_CROSSINGS, rng, _marker: std::marker::PhantomData }
    }

    pub fn with_max_crossings(mut self, max: usize) -> Self {
        self.max_crossings = max;
        self
    }

    pub fn reduce(&mut self, word: &DiagramWord) -> Result<SkeinVector<R>, BracketError> {
        let count = word.crossing_count();
        if count > self.max_crossings {
            return Err(BracketError::TooManyCrossings { count, max: self.max_crossings });
        }
        let mut memo = HashMap::new();
        Ok(self.reduce_inner(word.surface(), word.columns().to_vec(), &mut memo))
    }

    fn reduce_inner(
        &mut self,
        surface: &SurfaceSpec,
        cols: Vec<Column>,
        memo: &mut HashMap<Vec<Column>, SkeinVector<R>>,
    ) -> SkeinVector<R> {
        if let Some(v) = memo.get(&cols) {
            return v.clone();
        }
        let crossings: Vec<usize> = cols
            .iter()
            .enumerate()
            .filter(|(_, c)| matches!(c, Column::Over(_) | Column::Under(_)))
            .map(|(i, _)| i)
            .collect();
        let value = if crossings.is_empty() {
            let (circles, mc) = trace(surface, &cols).expect("smoothing preserves validity");
            SkeinVector::basis(mc).scale(&delta_power::<R>(circles))
        } else {
            let pick = match &self.order {
                CrossingOrder::First => crossings[0],
                CrossingOrder::Random(_) => {
                    let rng = self.rng.as_mut().expect("random order carries rng");
                    crossings[rng.gen_range(0..crossings.len())]
                }
            };
            let (p, keep_coeff, clasp_coeff) = match cols[pick] {
                Column::Over(p) => (p, R::a_pow(-1), R::a_pow(1)),
                Column::Under(p) => (p, R::a_pow(1), R::a_pow(-1)),
                _ => unreachable!("pick indexes a crossing"),
            };
            let mut keep = cols.clone();
            keep.remove(pick);
            let mut clasp = cols.clone();
            clasp.splice(pick..=pick, [Column::Cap(p), Column::Cup(p)]);
            let v_keep = self.reduce_inner(surface, keep, memo);
            let v_clasp = self.reduce_inner(surface, clasp, memo);
            v_keep.scale(&keep_coeff).add(&v_clasp.scale(&clasp_coeff))
        };
        memo.insert(cols, value.clone());
        value
    }
}

/// Literal Kauffman state sum: enumerates all 2^c smoothings by bitmask with
/// no caching or recursion. Exponential; guarded by `max_crossings`.
pub fn state_sum_oracle<R: Coeff>(
    word: &DiagramWord,
    max_crossings: usize,
) -> Result<SkeinVector<R>, BracketError> {
    let cols = word.columns();
    let crossings: Vec<usize> = cols
        .iter()
        .enumerate()
        .filter(|(_, c)| matches!(c, Column::Over(_) | Column::Under(_)))
        .map(|(i, _)| i)
        .collect();
    let c = crossings.len();
    if c > max_crossings {
        return Err(BracketError::TooManyCrossings { count: c, max: max_crossings });
    }
    let mut total = SkeinVector::zero();
    for mask in 0u64..(1u64 << c) {
        let mut coeff = R::one();
        let mut state: Vec<Column> = Vec::with_capacity(cols.len() + c);
        for (ci, col) in cols.iter().enumerate() {
            match *col {
                Column::Over(p) | Column::Under(p) => {
                    let bit = mask >> crossings.iter().position(|&x| x == ci).unwrap() & 1;
                    let over = matches!(col, Column::Over(_));
                    // bit 0: wires kept; bit 1: clasp smoothing
                    if bit == 0 {
                        coeff = coeff.mul(&if over { R::a_pow(-1) } else { R::a_pow(1) });
                    } else {
                        coeff = coeff.mul(&if over { R::a_pow(1) } else { R::a_pow(-1) });
                        state.push(Column::Cap(p));
                        state.push(Column::Cup(p));
                    }
                }
                other => state.push(other),
            }
        }
        let (circles, mc) = trace(word.surface(), &state).expect("smoothing preserves validity");
        total = total.add(&SkeinVector::basis(mc).scale(&coeff.mul(&delta_power::<R>(circles))));
    }
    Ok(total)
}
