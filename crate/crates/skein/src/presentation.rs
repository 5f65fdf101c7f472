//! Quotient-module presentations for surgered thickened disks.
//!
//! A preset names a closed picture: either the boundary connected sum of two
//! handlebodies, realized as a disk with `n + m` punctures and a 2-handle
//! attached along a separating wall curve, or the double of a solid torus
//! (one puncture, 2-handle along the cut-arc meridian). The module of the
//! surgered manifold is presented as the span of a registry of multicurve
//! generators modulo one handle-sliding relation per generator.
//!
//! Generators are drawn from the family of subset curves: for a set `S` of
//! punctures, `c_S` is the embedded curve enclosing exactly the punctures in
//! `S`, with cyclic word the increasing product of their letters. Multisets
//! of pairwise compatible subset curves enumerate the registry up to a
//! cutoff. Every relation term stays inside the registry; this closure is
//! checked at run time rather than assumed.

use crate::bracket::{SkeinVector, DEFAULT_MAX_CROSSINGS};
use crate::ring::{Coeff, LaurentPoly, RatFunc};
use crate::sliding::{encircle_relation, slide_relation, SlideError};
use crate::surface::{Column, CurveClass, DiagramWord, Multicurve, SurfaceSpec};
use rayon::prelude::*;
use std::collections::BTreeMap;
use std::fmt;
use thiserror::Error;

/// Default ceiling on registry size.
pub const DEFAULT_MAX_REGISTRY: usize = 10_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PresentError {
    #[error("registry holds {count} generators, limit {max}")]
    RegistryTooLarge { count: usize, max: usize },
    #[error("curve {curve} is not a subset curve; witnesses cover increasing positive words only")]
    UnsupportedClass { curve: String },
    #[error("no sweep layout for {multicurve} at puncture {time}: {detail}")]
    LevelObstructed { multicurve: String, time: u32, detail: String },
    #[error("relation for {generator} leaves the registry at term {term}")]
    ClosureViolated { generator: String, term: String },
    #[error("relation for {generator} has the same-or-higher grading term {term}")]
    NonTriangular { generator: String, term: String },
    #[error("relation for {generator} does not touch its own source")]
    MissingPivot { generator: String },
    #[error("survivors do not match the two-sided product basis: {detail}")]
    TensorMismatch { detail: String },
    #[error(transparent)]
    Slide(#[from] SlideError),
}

/// Coefficient ring selector for reports.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RingKind {
    /// Integer Laurent polynomials Z[A, A^-1].
    ZA,
    /// Rational functions Q(A).
    QA,
}

impl fmt::Display for RingKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingKind::ZA => write!(f, "ZA"),
            RingKind::QA => write!(f, "QA"),
        }
    }
}

/// A surgery preset.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Preset {
    /// Disk with `n + m` punctures, wall after the first `n`, 2-handle along
    /// the wall curve: the boundary connected sum of two handlebodies.
    ConnSum { n: u32, m: u32 },
    /// Disk with one puncture, 2-handle along the cut-arc meridian.
    S1xS2,
}

impl Preset {
    pub fn surface(&self) -> SurfaceSpec {
        match *self {
            Preset::ConnSum { n, m } => SurfaceSpec::with_split(n + m, n),
            Preset::S1xS2 => SurfaceSpec::disk(1),
        }
    }

    /// Grading of a generator: the bundle size its sliding relation wraps.
    pub fn grading(&self, mc: &Multicurve) -> usize {
        match *self {
            Preset::ConnSum { n, .. } => mc.wall_crossings(n),
            Preset::S1xS2 => mc.total_length(),
        }
    }

    /// Registry extent: total letter length admitted at cutoff `k`.
    fn max_length(&self, k: u32) -> usize {
        match *self {
            Preset::ConnSum { .. } => 2 * k as usize,
            Preset::S1xS2 => k as usize,
        }
    }
}

impl fmt::Display for Preset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Preset::ConnSum { .. } => write!(f, "connsum"),
            Preset::S1xS2 => write!(f, "s1xs2"),
        }
    }
}

/// Witness data for one registry entry.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorInfo {
    /// Bundle size of the sliding relation; zero for generators untouched by
    /// the handle.
    pub grading: usize,
    /// Crossingless diagram word reducing to exactly this generator.
    pub witness: DiagramWord,
    /// Column index in `witness` where sliding fragments insert.
    pub slice: usize,
}

#[derive(Debug, Clone)]
pub struct Registry {
    pub surface: SurfaceSpec,
    pub entries: BTreeMap<Multicurve, GeneratorInfo>,
}

/// One handle-sliding relation: `vector = 0` in the quotient, with `source`
/// the generator it was produced for.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relation<R: Coeff> {
    pub source: Multicurve,
    pub vector: SkeinVector<R>,
}

/// All nonempty puncture subsets, as increasing index lists.
pub fn seed_curves(punctures: u32) -> Vec<Vec<u32>> {
    let n = punctures as usize;
    let mut out = Vec::new();
    for mask in 1u64..(1u64 << n) {
        let set: Vec<u32> = (0..n).filter(|i| mask >> i & 1 == 1).map(|i| i as u32 + 1).collect();
        out.push(set);
    }
    out.sort_by_key(|s| (s.len(), s.clone()));
    out
}

/// Whether the subset curves of `a` and `b` can be realized disjointly.
/// Parallel copies and nested subsets always can; disjoint subsets can
/// exactly when their spans are nested or disjoint.
pub fn compatible(a: &[u32], b: &[u32]) -> bool {
    let subset = |x: &[u32], y: &[u32]| x.iter().all(|v| y.contains(v));
    if subset(a, b) || subset(b, a) {
        return true;
    }
    if a.iter().any(|v| b.contains(v)) {
        return false;
    }
    let (alo, ahi) = (a[0], *a.last().unwrap());
    let (blo, bhi) = (b[0], *b.last().unwrap());
    let nested = (blo <= alo && ahi <= bhi) || (alo <= blo && bhi <= ahi);
    let disjoint = ahi < blo || bhi < alo;
    nested || disjoint
}

fn subset_of(curve: &CurveClass) -> Result<Vec<u32>, PresentError> {
    let word = curve.word();
    let mut set = Vec::with_capacity(word.len());
    for l in word {
        if l.inverse || set.last().map_or(false, |&p| p >= l.puncture) {
            return Err(PresentError::UnsupportedClass { curve: curve.to_string() });
        }
        set.push(l.puncture);
    }
    Ok(set)
}

/// Builds the crossingless witness word for a compatible multicurve by a
/// left-to-right sweep over the punctures: curves are born as nested cup
/// pairs when their first puncture arrives, their bottom legs cross exactly
/// the cut arcs of their index set, and they die after their last puncture.
pub fn witness(preset: Preset, mc: &Multicurve) -> Result<GeneratorInfo, PresentError> {
    let surface = preset.surface();
    let split = match preset {
        Preset::ConnSum { n, .. } => n,
        Preset::S1xS2 => 1,
    };
    struct Instance {
        set: Vec<u32>,
        alive: bool,
    }
    let mut instances: Vec<Instance> = Vec::new();
    for curve in mc.curves() {
        instances.push(Instance { set: subset_of(curve)?, alive: false });
    }
    let obstruction = |time: u32, detail: String| PresentError::LevelObstructed {
        multicurve: mc.to_string(),
        time,
        detail,
    };

    // stack holds (instance index, is_low_leg)
    let mut stack: Vec<(usize, bool)> = Vec::new();
    let mut columns: Vec<Column> = Vec::new();
    let mut slice: Option<usize> = None;
    if matches!(preset, Preset::ConnSum { n: 0, .. }) {
        slice = Some(0);
    }
    for j in 1..=surface.punctures {
        // births: outermost first, so larger spans and sets go deeper
        let mut births: Vec<usize> = (0..instances.len())
            .filter(|&i| instances[i].set[0] == j)
            .collect();
        births.sort_by_key(|&i| {
            let s = &instances[i].set;
            (
                std::cmp::Reverse(s.last().unwrap() - s[0]),
                std::cmp::Reverse(s.len()),
                i,
            )
        });
        for i in births {
            let parent_low = stack
                .iter()
                .enumerate()
                .filter(|(_, &(o, low))| {
                    low && instances[o].alive
                        && instances[i].set.iter().all(|v| instances[o].set.contains(v))
                })
                .map(|(pos, _)| pos)
                .max();
            let at = parent_low.map_or(0, |p| p + 1);
            columns.push(Column::Cup(at));
            stack.insert(at, (i, true));
            stack.insert(at + 1, (i, false));
            instances[i].alive = true;
        }
        // cut arc of puncture j: the bottom `level` wires cross it
        let crossing_lows: Vec<usize> = stack
            .iter()
            .enumerate()
            .filter(|(_, &(i, low))| low && instances[i].set.contains(&j))
            .map(|(pos, _)| pos)
            .collect();
        let level = crossing_lows.len();
        if crossing_lows.iter().enumerate().any(|(k, &pos)| k != pos) {
            return Err(obstruction(
                j,
                format!(
                    "legs crossing the cut arc sit at positions {:?}, not at the stack bottom",
                    crossing_lows
                ),
            ));
        }
        columns.push(Column::Punct { index: j, level });
        if matches!(preset, Preset::S1xS2) && j == 1 {
            slice = Some(columns.len());
        }
        // deaths: innermost first
        let mut deaths: Vec<usize> = (0..instances.len())
            .filter(|&i| instances[i].alive && *instances[i].set.last().unwrap() == j)
            .collect();
        deaths.sort_by_key(|&i| {
            std::cmp::Reverse(stack.iter().position(|&(o, low)| o == i && low).unwrap())
        });
        for i in deaths {
            let low = stack.iter().position(|&(o, l)| o == i && l).unwrap();
            if stack.get(low + 1) != Some(&(i, false)) {
                return Err(obstruction(
                    j,
                    format!("legs of curve {:?} are not adjacent at death", instances[i].set),
                ));
            }
            columns.push(Column::Cap(low));
            stack.remove(low + 1);
            stack.remove(low);
            instances[i].alive = false;
        }
        if matches!(preset, Preset::ConnSum { .. }) && j == split {
            slice = Some(columns.len());
        }
    }
    debug_assert!(stack.is_empty());
    let word = DiagramWord::new(surface, columns).expect("sweep emits valid words");
    debug_assert_eq!(word.trace_multicurve().expect("crossingless").1, *mc);
    let grading = preset.grading(mc);
    let slice = slice.expect("every preset records a slice");
    debug_assert!(grading <= word.stack_size_at(slice));
    Ok(GeneratorInfo { grading, witness: word, slice })
}

/// Enumerates the registry: multisets of pairwise compatible subset curves
/// with total length and grading within the cutoff.
pub fn build_registry(preset: Preset, cutoff: u32, max_entries: usize) -> Result<Registry, PresentError> {
    let surface = preset.surface();
    let seeds = seed_curves(surface.punctures);
    let max_len = preset.max_length(cutoff);
    let mut picked: Vec<usize> = Vec::new();
    let mut all = vec![Multicurve::empty()];

    // the cap applies to the enumeration itself, so runaway parameters stop
    // before they allocate
    fn rec(
        seeds: &[Vec<u32>],
        start: usize,
        len_left: usize,
        cap: usize,
        picked: &mut Vec<usize>,
        all: &mut Vec<Multicurve>,
    ) -> bool {
        for i in start..seeds.len() {
            let s = &seeds[i];
            if s.len() > len_left {
                continue;
            }
            if !picked.iter().all(|&j| compatible(&seeds[j], s)) {
                continue;
            }
            if all.len() > cap {
                return false;
            }
            picked.push(i);
            let curves = picked
                .iter()
                .map(|&j| CurveClass::from_punctures(&seeds[j]).expect("nonempty subset"))
                .collect();
            all.push(Multicurve::from_curves(curves));
            let ok = rec(seeds, i, len_left - s.len(), cap, picked, all);
            picked.pop();
            if !ok {
                return false;
            }
        }
        true
    }
    let within = rec(&seeds, 0, max_len, max_entries, &mut picked, &mut all);
    if !within {
        return Err(PresentError::RegistryTooLarge { count: all.len(), max: max_entries });
    }

    let mut entries = BTreeMap::new();
    for mc in all {
        if preset.grading(&mc) > cutoff as usize {
            continue;
        }
        if entries.len() >= max_entries {
            return Err(PresentError::RegistryTooLarge { count: entries.len() + 1, max: max_entries });
        }
        let info = witness(preset, &mc)?;
        entries.insert(mc, info);
    }
    Ok(Registry { surface, entries })
}

/// Assembles one sliding relation per registry entry, in parallel, and
/// checks closure: every term of every relation is itself a registry entry.
pub fn assemble_relations<R: Coeff>(
    preset: Preset,
    registry: &Registry,
    max_crossings: usize,
) -> Result<Vec<Relation<R>>, PresentError> {
    let entries: Vec<(&Multicurve, &GeneratorInfo)> = registry.entries.iter().collect();
    let relations: Result<Vec<Relation<R>>, PresentError> = entries
        .par_iter()
        .map(|(mc, info)| {
            let vector = match preset {
                Preset::ConnSum { .. } => {
                    encircle_relation::<R>(&info.witness, info.slice, info.grading, max_crossings)?
                }
                Preset::S1xS2 => {
                    slide_relation::<R>(&info.witness, info.slice, info.grading, max_crossings)?
                }
            };
            Ok(Relation { source: (*mc).clone(), vector })
        })
        .collect();
    let relations = relations?;
    for rel in &relations {
        for (term, _) in rel.vector.iter() {
            if !registry.entries.contains_key(term) {
                return Err(PresentError::ClosureViolated {
                    generator: rel.source.to_string(),
                    term: term.to_string(),
                });
            }
        }
    }
    Ok(relations)
}

/// Outcome of eliminating the pivot generators over Q(A).
#[derive(Debug, Clone)]
pub struct EliminationResult {
    /// Registry entries with no relation pivot: a basis of the quotient over
    /// Q(A), in registry order.
    pub survivors: Vec<Multicurve>,
    /// Sources of nonzero relations with their integral pivot coefficients,
    /// in registry order.
    pub pivots: Vec<(Multicurve, LaurentPoly)>,
    /// For each pivot source, the reduced row: coefficient 1 on the source,
    /// all other support on survivors.
    pub echelon: BTreeMap<Multicurve, SkeinVector<RatFunc>>,
}

/// Checks the relations are graded-triangular and reduces them to echelon
/// form over Q(A) by substituting lower-grading pivot rows.
pub fn eliminate(
    preset: Preset,
    registry: &Registry,
    relations: &[Relation<LaurentPoly>],
) -> Result<EliminationResult, PresentError> {
    let mut pivots = Vec::new();
    for rel in relations {
        if rel.vector.is_zero() {
            continue;
        }
        let pivot = rel.vector.coeff(&rel.source);
        if pivot.is_zero() {
            return Err(PresentError::MissingPivot { generator: rel.source.to_string() });
        }
        let source_grading = preset.grading(&rel.source);
        for (term, _) in rel.vector.iter() {
            if term != &rel.source && preset.grading(term) >= source_grading {
                return Err(PresentError::NonTriangular {
                    generator: rel.source.to_string(),
                    term: term.to_string(),
                });
            }
        }
        pivots.push((rel.source.clone(), pivot));
    }
    let pivot_set: std::collections::BTreeSet<&Multicurve> = pivots.iter().map(|(m, _)| m).collect();
    let survivors: Vec<Multicurve> = registry
        .entries
        .keys()
        .filter(|m| !pivot_set.contains(m))
        .cloned()
        .collect();

    // substitution pass in increasing grading order; relations are
    // triangular, so every lower term is either a survivor or an already
    // reduced pivot
    let mut order: Vec<&Relation<LaurentPoly>> =
        relations.iter().filter(|r| !r.vector.is_zero()).collect();
    order.sort_by_key(|r| (preset.grading(&r.source), r.source.clone()));
    let mut echelon: BTreeMap<Multicurve, SkeinVector<RatFunc>> = BTreeMap::new();
    for rel in order {
        let mut row = rel.vector.map(|c| RatFunc::from_poly(c.clone()));
        for (source, reduced) in &echelon {
            let c = row.coeff(source);
            if !c.is_zero() {
                row = row.sub(&reduced.scale(&c));
            }
        }
        let lead = row.coeff(&rel.source);
        let inv = lead.inverse().expect("pivot is nonzero");
        let row = row.scale(&inv);
        for (term, _) in row.iter() {
            if term != &rel.source && pivot_set.contains(term) {
                return Err(PresentError::NonTriangular {
                    generator: rel.source.to_string(),
                    term: term.to_string(),
                });
            }
        }
        echelon.insert(rel.source.clone(), row);
    }
    Ok(EliminationResult { survivors, pivots, echelon })
}

/// A complete presentation: registry, integral relations, and the
/// elimination over Q(A).
#[derive(Debug, Clone)]
pub struct QuotientPresentation {
    pub preset: Preset,
    pub cutoff: u32,
    pub registry: Registry,
    pub relations: Vec<Relation<LaurentPoly>>,
    pub elimination: EliminationResult,
}

pub fn presentation(preset: Preset, cutoff: u32) -> Result<QuotientPresentation, PresentError> {
    presentation_with_limits(preset, cutoff, DEFAULT_MAX_CROSSINGS, DEFAULT_MAX_REGISTRY)
}

pub fn presentation_with_limits(
    preset: Preset,
    cutoff: u32,
    max_crossings: usize,
    max_entries: usize,
) -> Result<QuotientPresentation, PresentError> {
    // a grading-b relation inserts 2b crossings, so cutoffs beyond the
    // crossing guard are rejected before the registry is enumerated
    let worst = match preset {
        Preset::ConnSum { .. } => (cutoff - cutoff % 2) as usize,
        Preset::S1xS2 => cutoff as usize,
    };
    if 2 * worst > max_crossings {
        return Err(PresentError::Slide(SlideError::Bracket(
            crate::bracket::BracketError::TooManyCrossings { count: 2 * worst, max: max_crossings },
        )));
    }
    let registry = build_registry(preset, cutoff, max_entries)?;
    let relations = assemble_relations::<LaurentPoly>(preset, &registry, max_crossings)?;
    let elimination = eliminate(preset, &registry, &relations)?;
    Ok(QuotientPresentation { preset, cutoff, registry, relations, elimination })
}

impl QuotientPresentation {
    /// Splits a wall-grading-zero multicurve into its left and right parts.
    fn sides(&self, mc: &Multicurve) -> Option<(Multicurve, Multicurve)> {
        let n = match self.preset {
            Preset::ConnSum { n, .. } => n,
            Preset::S1xS2 => return None,
        };
        let mut left = Vec::new();
        let mut right = Vec::new();
        for c in mc.curves() {
            let ps: Vec<u32> = c.word().iter().map(|l| l.puncture).collect();
            if ps.iter().all(|&p| p <= n) {
                left.push(c.clone());
            } else if ps.iter().all(|&p| p > n) {
                right.push(c.clone());
            } else {
                return None;
            }
        }
        Some((Multicurve::from_curves(left), Multicurve::from_curves(right)))
    }

    /// Verifies the quotient basis is the product of one-sided bases: the
    /// survivors must biject with pairs of a left multicurve and a right
    /// multicurve within the length budget.
    pub fn tensor_check(&self) -> Result<(), PresentError> {
        let (n, m) = match self.preset {
            Preset::ConnSum { n, m } => (n, m),
            Preset::S1xS2 => {
                return Err(PresentError::TensorMismatch {
                    detail: "tensor comparison applies to the connected-sum preset".into(),
                })
            }
        };
        let max_len = self.preset.max_length(self.cutoff);
        // independent enumeration: one-sided multicurves on each factor
        let side = |lo: u32, hi: u32| -> Vec<Multicurve> {
            let local: Vec<Vec<u32>> = seed_curves(hi.saturating_sub(lo - 1))
                .into_iter()
                .map(|s| s.into_iter().map(|p| p + lo - 1).collect())
                .collect();
            let mut out = vec![Multicurve::empty()];
            let mut picked: Vec<usize> = Vec::new();
            fn rec(
                seeds: &[Vec<u32>],
                start: usize,
                len_left: usize,
                picked: &mut Vec<usize>,
                out: &mut Vec<Multicurve>,
            ) {
                for i in start..seeds.len() {
                    if seeds[i].len() > len_left
                        || !picked.iter().all(|&j| compatible(&seeds[j], &seeds[i]))
                    {
                        continue;
                    }
                    picked.push(i);
                    out.push(Multicurve::from_curves(
                        picked
                            .iter()
                            .map(|&j| CurveClass::from_punctures(&seeds[j]).unwrap())
                            .collect(),
                    ));
                    rec(seeds, i, len_left - seeds[i].len(), picked, out);
                    picked.pop();
                }
            }
            rec(&local, 0, max_len, &mut picked, &mut out);
            out
        };
        let lefts = if n > 0 { side(1, n) } else { vec![Multicurve::empty()] };
        let rights = if m > 0 { side(n + 1, n + m) } else { vec![Multicurve::empty()] };
        let mut expected: Vec<Multicurve> = Vec::new();
        for l in &lefts {
            for r in &rights {
                if l.total_length() + r.total_length() <= max_len {
                    expected.push(l.union(r));
                }
            }
        }
        expected.sort();
        expected.dedup();

        let got: Vec<Multicurve> = self.elimination.survivors.clone();
        for s in &got {
            if self.sides(s).is_none() {
                return Err(PresentError::TensorMismatch {
                    detail: format!("survivor {} crosses the wall", s),
                });
            }
        }
        let mut got_sorted = got.clone();
        got_sorted.sort();
        if got_sorted != expected {
            let missing = expected.iter().find(|e| !got_sorted.contains(e));
            let extra = got_sorted.iter().find(|g| !expected.contains(g));
            let detail = match (missing, extra) {
                (_, Some(x)) => format!("unexpected survivor {}", x),
                (Some(x), _) => format!("missing survivor {}", x),
                _ => "count mismatch".into(),
            };
            return Err(PresentError::TensorMismatch { detail });
        }
        Ok(())
    }

    fn parameters(&self, ring: RingKind, out: &mut String) {
        out.push_str("PARAMETERS\n");
        out.push_str(&format!("preset {}\n", self.preset));
        if let Preset::ConnSum { n, m } = self.preset {
            out.push_str(&format!("n {}\nm {}\n", n, m));
        }
        out.push_str(&format!("cutoff {}\n", self.cutoff));
        out.push_str(&format!("ring {}\n", ring));
        out.push_str(&format!("{}\n", self.registry.surface));
    }

    fn generators(&self, out: &mut String) {
        out.push_str("GENERATORS\n");
        for (mc, info) in &self.registry.entries {
            out.push_str(&format!("{} grading {}\n", mc, info.grading));
        }
    }

    fn relations_section(&self, ring: RingKind, out: &mut String) {
        out.push_str("RELATIONS\n");
        for rel in &self.relations {
            let grading = self.preset.grading(&rel.source);
            out.push_str(&format!("source {} grading {}\n", rel.source, grading));
            if rel.vector.is_zero() {
                out.push_str("zero\n");
                continue;
            }
            match ring {
                RingKind::ZA => {
                    for (mc, c) in rel.vector.iter() {
                        out.push_str(&format!("term {} * {}\n", c, mc));
                    }
                }
                RingKind::QA => {
                    let v = rel.vector.map(|c| RatFunc::from_poly(c.clone()));
                    for (mc, c) in v.iter() {
                        out.push_str(&format!("term {} * {}\n", c, mc));
                    }
                }
            }
            let pivot = rel.vector.coeff(&rel.source);
            let (unit, normal) = pivot.unit_normal_form();
            out.push_str(&format!("pivot ({}) * ({})\n", unit, normal));
        }
    }

    fn witnesses(&self, out: &mut String) {
        out.push_str("WITNESSES\n");
        for (mc, info) in &self.registry.entries {
            let cols: Vec<String> = info.witness.columns().iter().map(|c| c.to_string()).collect();
            out.push_str(&format!("{} slice {}: {}\n", mc, info.slice, cols.join(", ")));
        }
    }

    /// Registry and relations, without the elimination.
    pub fn report_relations(&self, ring: RingKind) -> String {
        let mut out = String::from("skein-report v1\n");
        self.parameters(ring, &mut out);
        self.generators(&mut out);
        self.relations_section(ring, &mut out);
        self.witnesses(&mut out);
        out
    }

    /// Full report including the surviving basis of the quotient.
    pub fn report_quotient(&self, ring: RingKind) -> String {
        let mut out = String::from("skein-report v1\n");
        self.parameters(ring, &mut out);
        self.generators(&mut out);
        self.relations_section(ring, &mut out);
        out.push_str("SURVIVORS\n");
        for s in &self.elimination.survivors {
            out.push_str(&format!("{}\n", s));
        }
        self.witnesses(&mut out);
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn class(indices: &[u32]) -> CurveClass {
        CurveClass::from_punctures(indices).unwrap()
    }

    fn mc(words: &[&[u32]]) -> Multicurve {
        Multicurve::from_curves(words.iter().map(|w| class(w)).collect())
    }

    fn p(pairs: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(pairs)
    }

    #[test]
    fn seed_curve_enumeration() {
        assert_eq!(seed_curves(2), vec![vec![1], vec![2], vec![1, 2]]);
        assert_eq!(seed_curves(3).len(), 7);
    }

    #[test]
    fn compatibility_rules() {
        assert!(compatible(&[1], &[1]));
        assert!(compatible(&[1], &[1, 2]));
        assert!(compatible(&[1], &[2]));
        assert!(compatible(&[2], &[1, 3]));
        assert!(compatible(&[1, 3], &[2]));
        assert!(compatible(&[1, 2], &[3, 4]));
        // span-compatible, but beyond the sweep builder; see the witness test
        assert!(compatible(&[2, 4], &[1, 3, 5]));
        assert!(!compatible(&[1, 2], &[2, 3]));
        assert!(!compatible(&[1, 3], &[2, 4]));
    }

    #[test]
    fn witness_words_for_basic_generators() {
        let preset = Preset::ConnSum { n: 1, m: 1 };
        let info = witness(preset, &mc(&[&[1, 2]])).unwrap();
        assert_eq!(
            info.witness.to_string(),
            "surface 2 split 1\ncup 0\npunct 1 1\npunct 2 1\ncap 0\n"
        );
        assert_eq!((info.slice, info.grading), (2, 2));

        let info = witness(preset, &Multicurve::empty()).unwrap();
        assert_eq!(info.witness.to_string(), "surface 2 split 1\npunct 1 0\npunct 2 0\n");
        assert_eq!((info.slice, info.grading), (1, 0));

        let info = witness(preset, &mc(&[&[1, 2], &[1, 2]])).unwrap();
        assert_eq!((info.slice, info.grading), (3, 4));
        assert_eq!(info.witness.trace_multicurve().unwrap().1, mc(&[&[1, 2], &[1, 2]]));
    }

    #[test]
    fn witness_handles_hops_and_nesting() {
        let preset = Preset::ConnSum { n: 2, m: 1 };
        let info = witness(preset, &mc(&[&[1, 3]])).unwrap();
        assert_eq!(
            info.witness.to_string(),
            "surface 3 split 2\ncup 0\npunct 1 1\npunct 2 0\npunct 3 1\ncap 0\n"
        );

        // an inner curve under a hop: born outside, dies before the hop lands
        let target = mc(&[&[1, 3], &[2]]);
        let info = witness(preset, &target).unwrap();
        assert_eq!(info.witness.trace_multicurve().unwrap().1, target);

        // nesting with shared lowest puncture
        let target = mc(&[&[1, 2, 3], &[1, 3]]);
        let info = witness(preset, &target).unwrap();
        assert_eq!(info.witness.trace_multicurve().unwrap().1, target);
    }

    #[test]
    fn witness_rejects_intractable_layouts() {
        let preset = Preset::ConnSum { n: 4, m: 1 };
        let target = mc(&[&[1, 3, 5], &[2, 4]]);
        match witness(preset, &target) {
            Err(PresentError::LevelObstructed { time: 3, .. }) => {}
            other => panic!("unexpected {:?}", other),
        }
    }

    #[test]
    fn witness_rejects_non_subset_classes() {
        let exotic = Multicurve::single(
            CurveClass::from_cyclic(vec![
                crate::surface::Letter::new(1),
                crate::surface::Letter::new(2),
                crate::surface::Letter::new(3),
                crate::surface::Letter::new(2).flipped(),
            ])
            .unwrap(),
        );
        match witness(Preset::ConnSum { n: 2, m: 1 }, &exotic) {
            Err(PresentError::UnsupportedClass { .. }) => {}
            other => panic!("unexpected {:?}", other),
        }
    }

    #[test]
    fn registry_counts_at_small_cutoffs() {
        let reg = build_registry(Preset::ConnSum { n: 1, m: 1 }, 2, DEFAULT_MAX_REGISTRY).unwrap();
        assert_eq!(reg.entries.len(), 21);
        assert!(!reg.entries.contains_key(&mc(&[&[1, 2], &[1, 2]])));
        let one_sided = reg.entries.values().filter(|i| i.grading == 0).count();
        assert_eq!(one_sided, 15);

        let reg = build_registry(Preset::S1xS2, 3, DEFAULT_MAX_REGISTRY).unwrap();
        let keys: Vec<&Multicurve> = reg.entries.keys().collect();
        assert_eq!(keys.len(), 4);
        assert_eq!(reg.entries[&mc(&[&[1], &[1], &[1]])].grading, 3);

        match build_registry(Preset::ConnSum { n: 1, m: 1 }, 2, 5) {
            Err(PresentError::RegistryTooLarge { max: 5, .. }) => {}
            other => panic!("unexpected {:?}", other.map(|r| r.entries.len())),
        }
    }

    #[test]
    fn oversized_cutoffs_hit_the_crossing_guard_early() {
        match presentation(Preset::S1xS2, 11) {
            Err(PresentError::Slide(SlideError::Bracket(
                crate::bracket::BracketError::TooManyCrossings { count: 22, max: 20 },
            ))) => {}
            other => panic!("unexpected {:?}", other.is_ok()),
        }
        match presentation(Preset::ConnSum { n: 1, m: 1 }, 12) {
            Err(PresentError::Slide(SlideError::Bracket(
                crate::bracket::BracketError::TooManyCrossings { count: 24, max: 20 },
            ))) => {}
            other => panic!("unexpected {:?}", other.is_ok()),
        }
    }

    #[test]
    fn connected_sum_presentation_small() {
        let q = presentation(Preset::ConnSum { n: 1, m: 1 }, 2).unwrap();
        assert_eq!(q.registry.entries.len(), 21);
        assert_eq!(q.elimination.pivots.len(), 6);
        assert_eq!(q.elimination.survivors.len(), 15);
        // every pivot wraps a bundle of two wall strands, and carries the
        // same coefficient up to the bystander factor
        let expected_pivot = p(&[(6, -1), (-6, -1), (2, 1), (-2, 1)]);
        for (source, pivot) in &q.elimination.pivots {
            assert_eq!(q.preset.grading(source), 2);
            assert_eq!(pivot, &expected_pivot, "pivot of {}", source);
            let (_, normal) = pivot.unit_normal_form();
            assert_eq!(normal, p(&[(12, 1), (8, -1), (4, -1), (0, 1)]));
            assert!(!pivot.is_unit());
        }
        q.tensor_check().unwrap();
    }

    #[test]
    fn torus_double_presentation_small() {
        let q = presentation(Preset::S1xS2, 3).unwrap();
        assert_eq!(q.elimination.survivors, vec![Multicurve::empty()]);
        let pivots: Vec<(usize, LaurentPoly)> = q
            .elimination
            .pivots
            .iter()
            .map(|(m, c)| (m.total_length(), c.clone()))
            .collect();
        assert_eq!(
            pivots,
            vec![
                (1, p(&[(0, 1), (6, -1)])),
                (2, p(&[(0, 1), (8, -1)])),
                (3, p(&[(0, 1), (10, -1)])),
            ]
        );
        for (_, pivot) in &q.elimination.pivots {
            assert!(!pivot.is_unit());
        }
        // echelon rows express each power in survivors only
        for (source, row) in &q.elimination.echelon {
            assert_eq!(row.coeff(source), RatFunc::one());
            for (term, _) in row.iter() {
                assert!(term == source || term.is_empty());
            }
        }
    }

    #[test]
    fn tensor_check_flags_withheld_relations() {
        let q = presentation(Preset::ConnSum { n: 1, m: 1 }, 2).unwrap();
        let withheld: Vec<Relation<LaurentPoly>> = q
            .relations
            .iter()
            .filter(|r| r.source != mc(&[&[1, 2]]))
            .cloned()
            .collect();
        let elimination = eliminate(q.preset, &q.registry, &withheld).unwrap();
        let tampered = QuotientPresentation { elimination, ..q.clone() };
        match tampered.tensor_check() {
            Err(PresentError::TensorMismatch { detail }) => {
                assert!(detail.contains("{x1 x2}"), "detail: {}", detail);
            }
            other => panic!("unexpected {:?}", other.is_ok()),
        }
    }

    #[test]
    fn larger_connected_sum_passes_tensor_check() {
        let q = presentation(Preset::ConnSum { n: 2, m: 1 }, 2).unwrap();
        q.tensor_check().unwrap();
        assert!(q.elimination.pivots.iter().all(|(m, _)| q.preset.grading(m) == 2));
    }

    #[test]
    fn report_sections_are_complete_and_stable() {
        let q = presentation(Preset::S1xS2, 2).unwrap();
        let report = q.report_quotient(RingKind::ZA);
        assert!(report.starts_with("skein-report v1\n"));
        for section in ["PARAMETERS", "GENERATORS", "RELATIONS", "SURVIVORS", "WITNESSES"] {
            assert!(report.contains(&format!("{}\n", section)), "missing {}", section);
        }
        assert!(report.contains("preset s1xs2\n"));
        assert!(report.contains("source {x1} grading 1\n"));
        assert!(report.contains("term -A^6 + 1 * {x1}\n"));
        assert!(report.contains("pivot (-1) * (A^6 - 1)\n"));
        assert!(report.contains("{} slice 1: punct 1 0\n"));
        let again = presentation(Preset::S1xS2, 2).unwrap().report_quotient(RingKind::ZA);
        assert_eq!(report, again);
        let qa = q.report_quotient(RingKind::QA);
        assert!(qa.contains("ring QA\n"));
    }
}
