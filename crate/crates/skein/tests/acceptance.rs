//! Acceptance gate: one test per advertised property, each printing a
//! single pass line. All comparisons are exact.

use skein::bracket::{CrossingOrder, Reducer, SkeinVector, DEFAULT_MAX_CROSSINGS};
use skein::presentation::{
    eliminate, presentation, witness, Preset, PresentError, QuotientPresentation, Relation,
};
use skein::ring::{Coeff, LaurentPoly};
use skein::sliding::{slide_identity_defect, SlideError};
use skein::surface::{Column, CurveClass, DiagramWord, Multicurve, SurfaceSpec};
use skein::verify::{encircle_pivot, run_suite};
use std::sync::OnceLock;

fn connsum_k4() -> &'static QuotientPresentation {
    static P: OnceLock<QuotientPresentation> = OnceLock::new();
    P.get_or_init(|| presentation(Preset::ConnSum { n: 1, m: 1 }, 4).expect("connsum presentation"))
}

fn s1xs2_k3() -> &'static QuotientPresentation {
    static P: OnceLock<QuotientPresentation> = OnceLock::new();
    P.get_or_init(|| presentation(Preset::S1xS2, 3).expect("s1xs2 presentation"))
}

fn pass(criterion: u32, what: &str) {
    println!("criterion {}: PASS - {}", criterion, what);
}

fn wall_pair(copies: usize) -> Multicurve {
    Multicurve::from_curves(vec![CurveClass::from_punctures(&[1, 2]).unwrap(); copies])
}

#[test]
fn criterion_1_framing_relation() {
    let reduce = |cols: Vec<Column>| {
        Reducer::<LaurentPoly>::new(CrossingOrder::First)
            .reduce(&DiagramWord::new(SurfaceSpec::disk(0), cols).unwrap())
            .unwrap()
    };
    let start = std::time::Instant::now();
    let positive = reduce(vec![Column::Cup(0), Column::Over(0), Column::Cap(0)]);
    let negative = reduce(vec![Column::Cup(0), Column::Under(0), Column::Cap(0)]);
    let elapsed = start.elapsed();
    let delta = <LaurentPoly as Coeff>::delta();
    let expect = |m: i64| {
        SkeinVector::from_terms(vec![(Multicurve::empty(), LaurentPoly::monomial(-1, m).mul(&delta))])
    };
    assert_eq!(positive, expect(3), "positive kink");
    assert_eq!(negative, expect(-3), "negative kink");
    assert!(elapsed.as_millis() < 10, "kink reduction took {:?}", elapsed);
    assert!(run_suite("framing", 0).unwrap().passed());
    pass(1, "one kink multiplies the unknot by -A^{+-3} exactly");
}

#[test]
fn criterion_2_leading_coefficient() {
    for k in 1..=8i64 {
        let lhs = LaurentPoly::from_terms(&[(2 * k + 2, 1), (-2 * k - 2, 1), (2, -1), (-2, -1)]);
        let rhs = LaurentPoly::monomial(1, -2 * k - 2)
            .mul(&LaurentPoly::from_terms(&[(2 * k + 4, 1), (0, -1)]))
            .mul(&LaurentPoly::from_terms(&[(2 * k, 1), (0, -1)]));
        assert_eq!(lhs, rhs, "factorization at k={}", k);
    }
    let q = connsum_k4();
    for (mc, k) in [(wall_pair(1), 2u32), (wall_pair(2), 4)] {
        let rel = q.relations.iter().find(|r| r.source == mc).expect("relation present");
        let pivot = rel.vector.coeff(&rel.source);
        assert_eq!(pivot, encircle_pivot(k), "pivot at k={}", k);
        let (_, normal) = pivot.unit_normal_form();
        let (_, target) = encircle_pivot(k).unit_normal_form();
        assert_eq!(normal, target, "pivot is a unit multiple of the k={} polynomial", k);
    }
    assert!(run_suite("coeff-k", 0).unwrap().passed());
    pass(2, "relation pivots realize -(A^{2k+2}+A^{-2k-2}-A^2-A^-2) at k=2,4 and the k=1..8 factorization holds");
}

#[test]
fn criterion_3_triangularity() {
    for cutoff in [2u32, 3, 4] {
        let q = if cutoff == 4 {
            connsum_k4().clone()
        } else {
            presentation(Preset::ConnSum { n: 1, m: 1 }, cutoff).unwrap()
        };
        for rel in &q.relations {
            if rel.vector.is_zero() {
                continue;
            }
            let k = q.preset.grading(&rel.source);
            for (term, _) in rel.vector.iter() {
                if term != &rel.source {
                    assert!(
                        q.preset.grading(term) + 2 <= k,
                        "K={}: term {} under source {}",
                        cutoff,
                        term,
                        rel.source
                    );
                }
            }
        }
    }
    pass(3, "non-pivot support of every encircle relation at K<=4 has grading <= k-2");
}

#[test]
fn criterion_4_connected_sum_tensor() {
    assert!(run_suite("tensor", 0).unwrap().passed());
    // direct spot checks on top of the suite
    let q = presentation(Preset::ConnSum { n: 1, m: 1 }, 2).unwrap();
    assert_eq!(q.elimination.survivors.len(), 15);
    q.tensor_check().unwrap();
    let withheld: Vec<Relation<LaurentPoly>> = q
        .relations
        .iter()
        .filter(|r| q.preset.grading(&r.source) == 0)
        .cloned()
        .collect();
    let elimination = eliminate(q.preset, &q.registry, &withheld).unwrap();
    let tampered = QuotientPresentation { elimination, ..q };
    assert!(
        matches!(tampered.tensor_check(), Err(PresentError::TensorMismatch { .. })),
        "negative control must fail"
    );
    pass(4, "connsum survivors biject with the one-sided product basis; withheld relations fail");
}

#[test]
fn criterion_5_slide_identity() {
    for (copies, k) in [(1usize, 2usize), (2, 4)] {
        let info = witness(Preset::ConnSum { n: 1, m: 1 }, &wall_pair(copies)).unwrap();
        let defect = slide_identity_defect::<LaurentPoly>(
            &info.witness,
            info.slice,
            k,
            DEFAULT_MAX_CROSSINGS,
        )
        .unwrap();
        assert!(defect.is_zero(), "defect at k={}: {}", k, defect);
    }
    let info = witness(Preset::ConnSum { n: 1, m: 1 }, &wall_pair(1)).unwrap();
    for k in [1usize, 3] {
        assert!(matches!(
            slide_identity_defect::<LaurentPoly>(&info.witness, info.slice, k, DEFAULT_MAX_CROSSINGS),
            Err(SlideError::OddGrading(_))
        ));
    }
    assert!(run_suite("thm71", 0).unwrap().passed());
    pass(5, "reduce(slide(z_k)) - A^6 reduce(wrap(z_k)) = 0 at k=2,4; odd k rejected");
}

#[test]
fn criterion_6_surgered_torus_rank_one() {
    let q = s1xs2_k3();
    assert_eq!(q.elimination.survivors, vec![Multicurve::empty()]);
    assert!(run_suite("s1xs2", 0).unwrap().passed());
    pass(6, "s1xs2 at K=3 over Q(A) has survivor set {} alone (rank 1)");
}

#[test]
fn criterion_7_torsion_witnesses() {
    let q = connsum_k4();
    assert!(!q.elimination.pivots.is_empty());
    for (source, pivot) in &q.elimination.pivots {
        assert!(!pivot.is_unit(), "pivot of {} is a unit", source);
    }
    let k2 = q
        .elimination
        .pivots
        .iter()
        .find(|(m, _)| *m == wall_pair(1))
        .expect("wall pair pivot");
    let (_, normal) = k2.1.unit_normal_form();
    let target = LaurentPoly::from_terms(&[(8, 1), (0, -1)])
        .mul(&LaurentPoly::from_terms(&[(4, 1), (0, -1)]));
    assert_eq!(normal, target, "k=2 pivot is unit*(A^8-1)(A^4-1)");

    let s = s1xs2_k3();
    for (a, top) in [(1usize, 6i64), (2, 8), (3, 10)] {
        let pivot = s
            .elimination
            .pivots
            .iter()
            .find(|(m, _)| m.total_length() == a)
            .map(|(_, p)| p.clone())
            .expect("pivot present");
        assert_eq!(pivot, LaurentPoly::from_terms(&[(0, 1), (top, -1)]));
        assert!(!pivot.is_unit());
    }
    pass(7, "integral pivots are non-units; connsum k=2 pivot is unit*(A^8-1)(A^4-1)");
}

#[test]
fn criterion_8_engine_soundness() {
    let start = std::time::Instant::now();
    for name in ["confluence", "oracle", "ucp"] {
        let report = run_suite(name, 0).unwrap();
        assert!(report.passed(), "suite {} failed:\n{}", name, report.render());
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs() < 120, "soundness suites took {:?}", elapsed);
    pass(8, "confluence, Reidemeister II/III, state-sum oracle, and ring consistency hold on random words");
}
