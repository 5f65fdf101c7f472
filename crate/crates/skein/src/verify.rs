//! Named verification suites.
//!
//! Each suite bundles the exact checks behind one advertised property of the
//! calculator: the framing factor, the encircle pivot coefficients and their
//! factorization, the even-grading slide identity, the connected-sum tensor
//! basis, the surgered solid torus, coefficient-ring consistency, confluence
//! of the reduction under resolution order and Reidemeister moves, and
//! agreement with the brute-force state sum. The command-line `verify`
//! subcommand and the acceptance tests both run exactly these functions.

use crate::bracket::{state_sum_oracle, CrossingOrder, Reducer, SkeinVector, DEFAULT_MAX_CROSSINGS};
use crate::presentation::{
    eliminate, presentation, witness, Preset, PresentError, QuotientPresentation, Relation,
};
use crate::presentation::assemble_relations;
use crate::ring::{Coeff, LaurentPoly, RatFunc};
use crate::sliding::{curl_fragment, insert_fragment, slide_identity_defect, SlideError};
use crate::surface::{Column, CurveClass, DiagramWord, Multicurve, SurfaceSpec};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Suite names accepted by `run_suite`, in canonical order.
pub const SUITES: &[&str] = &[
    "framing", "coeff-k", "thm71", "tensor", "s1xs2", "ucp", "confluence", "oracle",
];

/// Result of one suite: every check with its outcome, in run order.
#[derive(Debug, Clone)]
pub struct SuiteReport {
    pub name: &'static str,
    pub checks: Vec<(bool, String)>,
}

impl SuiteReport {
    fn new(name: &'static str) -> Self {
        SuiteReport { name, checks: Vec::new() }
    }

    fn check(&mut self, ok: bool, text: impl Into<String>) {
        self.checks.push((ok, text.into()));
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|(ok, _)| *ok)
    }

    pub fn render(&self) -> String {
        let mut out = format!("suite {}\n", self.name);
        for (ok, text) in &self.checks {
            out.push_str(if *ok { "ok " } else { "FAIL " });
            out.push_str(text);
            out.push('\n');
        }
        let failed = self.checks.iter().filter(|(ok, _)| !ok).count();
        if failed == 0 {
            out.push_str(&format!("{}: pass ({} checks)\n", self.name, self.checks.len()));
        } else {
            out.push_str(&format!(
                "{}: fail ({}/{} checks failed)\n",
                self.name,
                failed,
                self.checks.len()
            ));
        }
        out
    }
}

/// Runs one suite by name; `None` for an unknown name.
pub fn run_suite(name: &str, seed: u64) -> Option<SuiteReport> {
    match name {
        "framing" => Some(framing(seed)),
        "coeff-k" => Some(coeff_k()),
        "thm71" => Some(thm71()),
        "tensor" => Some(tensor()),
        "s1xs2" => Some(s1xs2()),
        "ucp" => Some(ucp(seed)),
        "confluence" => Some(confluence(seed)),
        "oracle" => Some(oracle(seed)),
        _ => None,
    }
}

/// Runs every suite in canonical order.
pub fn run_all(seed: u64) -> Vec<SuiteReport> {
    SUITES.iter().map(|n| run_suite(n, seed).expect("known name")).collect()
}

fn delta() -> LaurentPoly {
    LaurentPoly::delta()
}

fn reduce(word: &DiagramWord) -> SkeinVector<LaurentPoly> {
    Reducer::<LaurentPoly>::new(CrossingOrder::First)
        .reduce(word)
        .expect("within crossing guard")
}

/// Random closed diagram word on a punctured disk; `budget` caps crossings.
fn random_word(rng: &mut ChaCha8Rng, punctures: u32, budget: usize) -> DiagramWord {
    fn step(
        rng: &mut ChaCha8Rng,
        columns: &mut Vec<Column>,
        stack: &mut usize,
        crossings: &mut usize,
        budget: usize,
    ) {
        let can_pair = *stack >= 2;
        let can_cross = can_pair && *crossings < budget;
        let choice = rng.gen_range(0..100u32);
        if !can_pair || choice < 40 {
            let p = rng.gen_range(0..=*stack);
            columns.push(Column::Cup(p));
            *stack += 2;
        } else if choice < 70 || !can_cross {
            let p = rng.gen_range(0..=*stack - 2);
            columns.push(Column::Cap(p));
            *stack -= 2;
        } else {
            let p = rng.gen_range(0..=*stack - 2);
            columns.push(if rng.gen_bool(0.5) { Column::Over(p) } else { Column::Under(p) });
            *crossings += 1;
        }
    }
    let mut columns = Vec::new();
    let mut stack = 0usize;
    let mut crossings = 0usize;
    for j in 1..=punctures {
        for _ in 0..rng.gen_range(0..4u32) {
            step(rng, &mut columns, &mut stack, &mut crossings, budget);
        }
        let level = rng.gen_range(0..=stack);
        columns.push(Column::Punct { index: j, level });
    }
    for _ in 0..rng.gen_range(0..3u32) {
        step(rng, &mut columns, &mut stack, &mut crossings, budget);
    }
    while stack > 0 {
        let p = rng.gen_range(0..=stack - 2);
        columns.push(Column::Cap(p));
        stack -= 2;
    }
    DiagramWord::new(SurfaceSpec::disk(punctures), columns).expect("moves preserve validity")
}

/// Random insertion point where at least `min_stack` wires are present.
fn random_slice(rng: &mut ChaCha8Rng, word: &DiagramWord, min_stack: usize) -> Option<usize> {
    let candidates: Vec<usize> = (0..=word.columns().len())
        .filter(|&i| word.stack_size_at(i) >= min_stack)
        .collect();
    if candidates.is_empty() {
        None
    } else {
        Some(candidates[rng.gen_range(0..candidates.len())])
    }
}

fn random_word_with_slice(
    rng: &mut ChaCha8Rng,
    punctures: u32,
    budget: usize,
    min_stack: usize,
) -> (DiagramWord, usize) {
    loop {
        let word = random_word(rng, punctures, budget);
        if let Some(at) = random_slice(rng, &word, min_stack) {
            return (word, at);
        }
    }
}

/// Kink and trivial-circle factors: a positive kink multiplies by -A^3, a
/// negative kink by -A^-3, and a split trivial circle by -A^2 - A^-2.
fn framing(seed: u64) -> SuiteReport {
    let mut suite = SuiteReport::new("framing");
    let surface = SurfaceSpec::disk(1);
    let kink = |col: Column| {
        DiagramWord::new(surface, vec![Column::Cup(0), col, Column::Cap(0), Column::Punct { index: 1, level: 0 }])
            .unwrap()
    };
    let pos = reduce(&kink(Column::Over(0)));
    let expected = SkeinVector::from_terms(vec![(
        Multicurve::empty(),
        LaurentPoly::monomial(-1, 3).mul(&delta()),
    )]);
    suite.check(
        pos == expected,
        format!("positive kink on the unknot reduces to (-A^3)*delta: {}", pos),
    );
    let neg = reduce(&kink(Column::Under(0)));
    let expected = SkeinVector::from_terms(vec![(
        Multicurve::empty(),
        LaurentPoly::monomial(-1, -3).mul(&delta()),
    )]);
    suite.check(
        neg == expected,
        format!("negative kink on the unknot reduces to (-A^-3)*delta: {}", neg),
    );

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut curl_ok = 0usize;
    let mut circle_ok = 0usize;
    let rounds = 12;
    let mut first_fail = String::new();
    for _ in 0..rounds {
        let (word, at) = random_word_with_slice(&mut rng, 2, 0, 1);
        let plain = reduce(&word);
        for positive in [true, false] {
            let curled = insert_fragment(&word, at, &curl_fragment(positive, 0)).unwrap();
            let factor = LaurentPoly::monomial(-1, if positive { 3 } else { -3 });
            if reduce(&curled) == plain.scale(&factor) {
                curl_ok += 1;
            } else if first_fail.is_empty() {
                first_fail = format!("curl mismatch on {}", word);
            }
        }
        let at = random_slice(&mut rng, &word, 0).unwrap();
        let circled = insert_fragment(&word, at, &[Column::Cup(0), Column::Cap(0)]).unwrap();
        if reduce(&circled) == plain.scale(&delta()) {
            circle_ok += 1;
        } else if first_fail.is_empty() {
            first_fail = format!("split circle mismatch on {}", word);
        }
    }
    suite.check(
        curl_ok == 2 * rounds,
        format!("random curls multiply by -A^{{+-3}} ({}/{} words) {}", curl_ok, 2 * rounds, first_fail),
    );
    suite.check(
        circle_ok == rounds,
        format!("random split circles multiply by delta ({}/{} words) {}", circle_ok, rounds, first_fail),
    );
    suite
}

/// The pivot coefficient on an encircled grading-k generator, as a Laurent
/// polynomial: -(A^{2k+2} + A^{-2k-2} - A^2 - A^-2).
pub fn encircle_pivot(k: u32) -> LaurentPoly {
    let k = k as i64;
    LaurentPoly::from_terms(&[(2 * k + 2, -1), (-2 * k - 2, -1), (2, 1), (-2, 1)])
}

/// Pivot values, their factorization, and relation triangularity.
fn coeff_k() -> SuiteReport {
    let mut suite = SuiteReport::new("coeff-k");
    for k in 1..=8u32 {
        let ki = k as i64;
        let lhs = LaurentPoly::from_terms(&[(2 * ki + 2, 1), (-2 * ki - 2, 1), (2, -1), (-2, -1)]);
        let rhs = LaurentPoly::monomial(1, -2 * ki - 2)
            .mul(&LaurentPoly::from_terms(&[(2 * ki + 4, 1), (0, -1)]))
            .mul(&LaurentPoly::from_terms(&[(2 * ki, 1), (0, -1)]));
        suite.check(
            lhs == rhs,
            format!("A^{{2k+2}}+A^{{-2k-2}}-A^2-A^-2 = A^{{-2k-2}}(A^{{2k+4}}-1)(A^{{2k}}-1) at k={}", k),
        );
    }

    let wall_pair = Multicurve::from_curves(vec![CurveClass::from_punctures(&[1, 2]).unwrap()]);
    let z4 = Multicurve::from_curves(vec![
        CurveClass::from_punctures(&[1, 2]).unwrap(),
        CurveClass::from_punctures(&[1, 2]).unwrap(),
    ]);
    for cutoff in [2u32, 3, 4] {
        match presentation(Preset::ConnSum { n: 1, m: 1 }, cutoff) {
            Ok(q) => {
                let mut triangular = true;
                let mut pivot_match = true;
                let mut detail = String::new();
                for rel in &q.relations {
                    if rel.vector.is_zero() {
                        continue;
                    }
                    let k = q.preset.grading(&rel.source);
                    let pivot = rel.vector.coeff(&rel.source);
                    if pivot != encircle_pivot(k as u32) {
                        pivot_match = false;
                        if detail.is_empty() {
                            detail = format!("pivot of {} is {}", rel.source, pivot);
                        }
                    }
                    for (term, _) in rel.vector.iter() {
                        if term != &rel.source && q.preset.grading(term) + 2 > k {
                            triangular = false;
                            if detail.is_empty() {
                                detail = format!("term {} under source {}", term, rel.source);
                            }
                        }
                    }
                }
                suite.check(
                    pivot_match,
                    format!("every pivot at K={} equals -(A^{{2k+2}}+A^{{-2k-2}}-A^2-A^-2) {}", cutoff, detail),
                );
                suite.check(
                    triangular,
                    format!("non-pivot support at K={} has grading <= k-2 {}", cutoff, detail),
                );
                if cutoff == 2 {
                    let pivot = q
                        .relations
                        .iter()
                        .find(|r| r.source == wall_pair)
                        .map(|r| r.vector.coeff(&r.source))
                        .unwrap_or_else(LaurentPoly::zero);
                    let (_, normal) = pivot.unit_normal_form();
                    let target = LaurentPoly::from_terms(&[(8, 1), (0, -1)])
                        .mul(&LaurentPoly::from_terms(&[(4, 1), (0, -1)]));
                    suite.check(
                        normal == target && !pivot.is_unit(),
                        format!("k=2 pivot is unit*(A^8-1)(A^4-1): {}", pivot),
                    );
                }
                if cutoff == 4 {
                    let pivot = q
                        .relations
                        .iter()
                        .find(|r| r.source == z4)
                        .map(|r| r.vector.coeff(&r.source))
                        .unwrap_or_else(LaurentPoly::zero);
                    suite.check(
                        pivot == encircle_pivot(4),
                        format!("k=4 pivot on the doubled wall pair: {}", pivot),
                    );
                }
            }
            Err(e) => suite.check(false, format!("presentation at K={} failed: {}", cutoff, e)),
        }
    }
    suite
}

/// The even-grading slide identity: the banded encircle equals A^6 times the
/// wrapped bundle, so their reductions agree exactly; odd bundles have no
/// such identity and are rejected.
fn thm71() -> SuiteReport {
    let mut suite = SuiteReport::new("thm71");
    let preset = Preset::ConnSum { n: 1, m: 1 };
    let wall_pair = Multicurve::from_curves(vec![CurveClass::from_punctures(&[1, 2]).unwrap()]);
    let doubled = Multicurve::from_curves(vec![
        CurveClass::from_punctures(&[1, 2]).unwrap(),
        CurveClass::from_punctures(&[1, 2]).unwrap(),
    ]);
    for (mc, k) in [(wall_pair, 2usize), (doubled, 4)] {
        match witness(preset, &mc) {
            Ok(info) => {
                let defect = slide_identity_defect::<LaurentPoly>(
                    &info.witness,
                    info.slice,
                    k,
                    DEFAULT_MAX_CROSSINGS,
                );
                match defect {
                    Ok(v) => suite.check(
                        v.is_zero(),
                        format!("slide equals A^6 * wrap at k={}: defect {}", k, v),
                    ),
                    Err(e) => suite.check(false, format!("defect at k={} errored: {}", k, e)),
                }
            }
            Err(e) => suite.check(false, format!("witness for k={} failed: {}", k, e)),
        }
    }
    let info = witness(preset, &Multicurve::single(CurveClass::from_punctures(&[1, 2]).unwrap()))
        .expect("wall pair witness");
    for k in [1usize, 3] {
        let got = slide_identity_defect::<LaurentPoly>(&info.witness, info.slice, k, DEFAULT_MAX_CROSSINGS);
        suite.check(
            matches!(got, Err(SlideError::OddGrading(b)) if b == k),
            format!("odd bundle k={} is rejected", k),
        );
    }
    suite
}

/// Connected-sum survivors form the product of the one-sided bases; removing
/// the wall relations breaks this, and the checker notices.
fn tensor() -> SuiteReport {
    let mut suite = SuiteReport::new("tensor");
    let cases = [
        (Preset::ConnSum { n: 1, m: 1 }, 2u32, Some(15usize)),
        (Preset::ConnSum { n: 1, m: 1 }, 3, None),
        (Preset::ConnSum { n: 2, m: 1 }, 2, None),
    ];
    for (preset, cutoff, expected_survivors) in cases {
        match presentation(preset, cutoff) {
            Ok(q) => {
                let (n, m) = match preset {
                    Preset::ConnSum { n, m } => (n, m),
                    Preset::S1xS2 => unreachable!(),
                };
                let ok = q.tensor_check().is_ok();
                suite.check(
                    ok,
                    format!(
                        "connsum({},{}) K={} survivors match the product basis ({} survivors)",
                        n, m, cutoff, q.elimination.survivors.len()
                    ),
                );
                if let Some(count) = expected_survivors {
                    suite.check(
                        q.elimination.survivors.len() == count,
                        format!(
                            "connsum({},{}) K={} has {} survivors, expected {}",
                            n, m, cutoff, q.elimination.survivors.len(), count
                        ),
                    );
                }
            }
            Err(e) => suite.check(false, format!("presentation failed: {}", e)),
        }
    }

    // negative control: withholding the wall relations must break the basis
    let q = presentation(Preset::ConnSum { n: 1, m: 1 }, 2).expect("presentation");
    let withheld: Vec<Relation<LaurentPoly>> = q
        .relations
        .iter()
        .filter(|r| q.preset.grading(&r.source) == 0)
        .cloned()
        .collect();
    let elimination = eliminate(q.preset, &q.registry, &withheld).expect("eliminate");
    let tampered = QuotientPresentation { elimination, ..q };
    match tampered.tensor_check() {
        Err(PresentError::TensorMismatch { detail }) => suite.check(
            detail.contains("crosses the wall"),
            format!("withheld wall relations are detected: {}", detail),
        ),
        other => suite.check(
            false,
            format!("withheld wall relations went unnoticed (ok={})", other.is_ok()),
        ),
    }
    suite
}

/// The surgered solid torus: every nonempty power of the core-encircling
/// curve is annihilated over Q(A), leaving the empty multicurve as the only
/// basis element; over Z[A] the pivots are non-units.
fn s1xs2() -> SuiteReport {
    let mut suite = SuiteReport::new("s1xs2");
    match presentation(Preset::S1xS2, 3) {
        Ok(q) => {
            suite.check(
                q.elimination.survivors == vec![Multicurve::empty()],
                format!(
                    "K=3 survivors are exactly the empty multicurve ({} survivors)",
                    q.elimination.survivors.len()
                ),
            );
            for (a, expected) in [(1i64, 6i64), (2, 8), (3, 10)] {
                let source: Vec<&(Multicurve, LaurentPoly)> = q
                    .elimination
                    .pivots
                    .iter()
                    .filter(|(mcv, _)| mcv.total_length() == a as usize)
                    .collect();
                let ok = source.len() == 1
                    && source[0].1 == LaurentPoly::from_terms(&[(0, 1), (expected, -1)]);
                suite.check(
                    ok,
                    format!("grading {} pivot equals 1 - A^{}", a, expected),
                );
            }
            suite.check(
                q.elimination.pivots.iter().all(|(_, p)| !p.is_unit()),
                "all pivots are non-units of Z[A, A^-1]",
            );
        }
        Err(e) => suite.check(false, format!("presentation failed: {}", e)),
    }
    suite
}

/// Coefficient-ring consistency: reducing over Q(A) agrees with reducing
/// over Z[A, A^-1] and mapping into the field, for random words and for
/// whole relation families.
fn ucp(seed: u64) -> SuiteReport {
    let mut suite = SuiteReport::new("ucp");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let rounds = 25;
    let mut agree = 0usize;
    let mut first_fail = String::new();
    for _ in 0..rounds {
        let word = random_word(&mut rng, 2, 8);
        let integral = reduce(&word).map(|c| RatFunc::from_poly(c.clone()));
        let rational = Reducer::<RatFunc>::new(CrossingOrder::First)
            .reduce(&word)
            .expect("within crossing guard");
        if integral == rational {
            agree += 1;
        } else if first_fail.is_empty() {
            first_fail = format!("mismatch on {}", word);
        }
    }
    suite.check(
        agree == rounds,
        format!("random reductions agree over both rings ({}/{}) {}", agree, rounds, first_fail),
    );

    for (preset, cutoff) in [(Preset::ConnSum { n: 1, m: 1 }, 2u32), (Preset::S1xS2, 3)] {
        let q = presentation(preset, cutoff).expect("presentation");
        let rational = assemble_relations::<RatFunc>(preset, &q.registry, DEFAULT_MAX_CROSSINGS)
            .expect("relations over Q(A)");
        let ok = q.relations.len() == rational.len()
            && q.relations.iter().zip(&rational).all(|(a, b)| {
                a.source == b.source
                    && a.vector.map(|c| RatFunc::from_poly(c.clone())) == b.vector
            });
        suite.check(ok, format!("{} K={} relations agree over both rings", preset, cutoff));
        let survivors: std::collections::BTreeSet<&Multicurve> =
            q.elimination.survivors.iter().collect();
        let rows_ok = q.elimination.echelon.iter().all(|(source, row)| {
            row.coeff(source) == RatFunc::one()
                && row.iter().all(|(t, _)| t == source || survivors.contains(t))
        });
        suite.check(rows_ok, format!("{} K={} echelon rows reduce onto survivors", preset, cutoff));
    }
    suite
}

/// Confluence: the reduction result is independent of crossing resolution
/// order, and invariant under second and third Reidemeister moves.
fn confluence(seed: u64) -> SuiteReport {
    let mut suite = SuiteReport::new("confluence");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let rounds = 100;
    let mut order_ok = 0usize;
    let mut first_fail = String::new();
    for i in 0..rounds {
        let word = random_word(&mut rng, 2, 8);
        let base = reduce(&word);
        let mut all = true;
        for s in 0..2u64 {
            let alt = Reducer::<LaurentPoly>::new(CrossingOrder::Random(seed ^ ((i as u64) << 8) ^ s))
                .reduce(&word)
                .expect("within crossing guard");
            all &= alt == base;
        }
        if all {
            order_ok += 1;
        } else if first_fail.is_empty() {
            first_fail = format!("order dependence on {}", word);
        }
    }
    suite.check(
        order_ok == rounds,
        format!("resolution order never changes the result ({}/{}) {}", order_ok, rounds, first_fail),
    );

    let rounds = 25;
    let mut r2_ok = 0usize;
    let mut r3_ok = 0usize;
    for _ in 0..rounds {
        let (word, at) = random_word_with_slice(&mut rng, 2, 6, 2);
        let base = reduce(&word);
        let mut ok = true;
        for pair in [[Column::Over(0), Column::Under(0)], [Column::Under(0), Column::Over(0)]] {
            let moved = insert_fragment(&word, at, &pair).unwrap();
            ok &= reduce(&moved) == base;
        }
        if ok {
            r2_ok += 1;
        } else if first_fail.is_empty() {
            first_fail = format!("R2 failure on {}", word);
        }

        let (word, at) = random_word_with_slice(&mut rng, 2, 6, 3);
        let left = insert_fragment(&word, at, &[Column::Over(0), Column::Over(1), Column::Over(0)]).unwrap();
        let right = insert_fragment(&word, at, &[Column::Over(1), Column::Over(0), Column::Over(1)]).unwrap();
        if reduce(&left) == reduce(&right) {
            r3_ok += 1;
        } else if first_fail.is_empty() {
            first_fail = format!("R3 failure on {}", word);
        }
    }
    suite.check(
        r2_ok == rounds,
        format!("second Reidemeister move is invisible ({}/{}) {}", r2_ok, rounds, first_fail),
    );
    suite.check(
        r3_ok == rounds,
        format!("third Reidemeister move is invisible ({}/{}) {}", r3_ok, rounds, first_fail),
    );
    suite
}

/// Agreement with the brute-force state sum, on dense fixed words and on
/// random words.
fn oracle(seed: u64) -> SuiteReport {
    let mut suite = SuiteReport::new("oracle");
    let doubled = DiagramWord::parse(
        "surface 2 split 1\ncup 0\ncup 1\npunct 1 2\npunct 2 2\ncap 1\ncap 0\n",
    )
    .expect("doubled wall pair");
    let encircled = insert_fragment(&doubled, 3, &crate::sliding::encircle_fragment(4)).unwrap();
    let crowded = insert_fragment(&encircled, 3, &[Column::Over(0), Column::Under(0)]).unwrap();
    for word in [&encircled, &crowded] {
        let fast = reduce(word);
        let slow = state_sum_oracle::<LaurentPoly>(word, DEFAULT_MAX_CROSSINGS)
            .expect("within crossing guard");
        suite.check(
            fast == slow,
            format!("state sum agrees on a fixed {}-crossing word", word.crossing_count()),
        );
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let rounds = 40;
    let mut agree = 0usize;
    let mut max_seen = crowded.crossing_count();
    let mut first_fail = String::new();
    for i in 0..rounds {
        let mut word = random_word(&mut rng, 2, 6);
        if i % 2 == 0 {
            if let Some(at) = random_slice(&mut rng, &word, 2) {
                let b = word.stack_size_at(at).min(3);
                word = insert_fragment(&word, at, &crate::sliding::encircle_fragment(b)).unwrap();
            }
        }
        max_seen = max_seen.max(word.crossing_count());
        let fast = reduce(&word);
        let slow = state_sum_oracle::<LaurentPoly>(&word, DEFAULT_MAX_CROSSINGS)
            .expect("within crossing guard");
        if fast == slow {
            agree += 1;
        } else if first_fail.is_empty() {
            first_fail = format!("oracle disagreement on {}", word);
        }
    }
    suite.check(
        agree == rounds,
        format!(
            "memoized reduction matches the state sum ({}/{}, up to {} crossings) {}",
            agree, rounds, max_seen, first_fail
        ),
    );
    suite.check(max_seen >= 10, format!("sample includes words with {} crossings", max_seen));
    suite
}
