//! Handle-sliding fragments and relation vectors.
//!
//! A surgery presentation attaches a 2-handle along a framed curve gamma in
//! the thickened surface. In the surgered manifold a pushoff of gamma bounds
//! a disk, so a copy of gamma drawn around a bundle of strands can be slid
//! off them through the handle. Each generator diagram therefore yields a
//! relation in the quotient module, built here in two styles:
//!
//! * *encircle*: gamma drawn around the bundle equals a split trivial
//!   circle, giving `reduce(encircled) - delta * reduce(word)`;
//! * *slide*: the generator band-slid over the handle equals the generator,
//!   giving `reduce(word) - reduce(slid word)`.
//!
//! Fragments are column sequences acting on the bottom `bundle` wires of the
//! stack at an insertion point; wires above the bundle pass by untouched.

use crate::bracket::{BracketError, CrossingOrder, Reducer, SkeinVector};
use crate::ring::Coeff;
use crate::surface::{Column, DiagramWord, WordError};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SlideError {
    /// Slide identities compare strand pairs crossing a separating wall;
    /// odd bundle sizes do not arise from closed curves.
    #[error("bundle size {0} is odd; wall-crossing bundles are even")]
    OddGrading(usize),
    /// The insertion point does not hold at least `expected` wires.
    #[error("column {at_column}: bundle of {expected} wires exceeds stack size {found}")]
    BundleMismatch { at_column: usize, expected: usize, found: usize },
    #[error(transparent)]
    Word(#[from] WordError),
    #[error(transparent)]
    Bracket(#[from] BracketError),
}

/// A circle clasped around the bottom `bundle` wires: the circle's upper arc
/// passes over every wire on the way up and over every wire on the way back
/// down, so circle and bundle are linked. `bundle = 0` gives a split trivial
/// circle.
pub fn encircle_fragment(bundle: usize) -> Vec<Column> {
    let mut cols = vec![Column::Cup(0)];
    for q in 1..=bundle {
        cols.push(Column::Over(q));
    }
    for q in (1..=bundle).rev() {
        cols.push(Column::Over(q));
    }
    cols.push(Column::Cap(0));
    cols
}

/// The encircling circle band-summed onto the lowest bundle wire: the image
/// of the bundle after sliding over the 2-handle.
pub fn slide_fragment(bundle: usize) -> Vec<Column> {
    assert!(bundle >= 1, "slide fragment needs a nonempty bundle");
    let mut cols = vec![Column::Cup(0)];
    for q in 1..=bundle {
        cols.push(Column::Over(q));
    }
    for q in (1..=bundle).rev() {
        cols.push(Column::Over(q));
    }
    cols.push(Column::Cap(1));
    cols.push(Column::Cup(1));
    cols.push(Column::Cap(0));
    cols
}

/// The bottom wire diving under the other `bundle - 1` wires and back: the
/// local modification whose relation the slide relation is a unit multiple
/// of. Empty for `bundle = 1`.
pub fn wrap_fragment(bundle: usize) -> Vec<Column> {
    assert!(bundle >= 1, "wrap fragment needs a nonempty bundle");
    let mut cols = Vec::new();
    for q in 0..bundle - 1 {
        cols.push(Column::Under(q));
    }
    for q in (0..bundle - 1).rev() {
        cols.push(Column::Under(q));
    }
    cols
}

/// A kink on the wire at position `p`; positive multiplies the bracket by
/// -A^3, negative by -A^-3.
pub fn curl_fragment(positive: bool, p: usize) -> Vec<Column> {
    let crossing = if positive { Column::Under(p + 1) } else { Column::Over(p + 1) };
    vec![Column::Cup(p), crossing, Column::Cap(p)]
}

/// Splices `fragment` into `word` before column `at` and revalidates.
pub fn insert_fragment(word: &DiagramWord, at: usize, fragment: &[Column]) -> Result<DiagramWord, SlideError> {
    let mut cols = word.columns().to_vec();
    cols.splice(at..at, fragment.iter().copied());
    Ok(DiagramWord::new(*word.surface(), cols)?)
}

fn check_bundle(word: &DiagramWord, at: usize, bundle: usize) -> Result<(), SlideError> {
    let found = word.stack_size_at(at);
    if bundle > found {
        return Err(SlideError::BundleMismatch { at_column: at, expected: bundle, found });
    }
    Ok(())
}

fn reduce<R: Coeff>(word: &DiagramWord, max_crossings: usize) -> Result<SkeinVector<R>, SlideError> {
    Ok(Reducer::new(CrossingOrder::First)
        .with_max_crossings(max_crossings)
        .reduce(word)?)
}

/// Relation from unlinking an encircling pushoff through the handle:
/// `reduce(word with bundle encircled at `at`) - delta * reduce(word)`.
pub fn encircle_relation<R: Coeff>(
    word: &DiagramWord,
    at: usize,
    bundle: usize,
    max_crossings: usize,
) -> Result<SkeinVector<R>, SlideError> {
    check_bundle(word, at, bundle)?;
    let encircled = insert_fragment(word, at, &encircle_fragment(bundle))?;
    let lhs = reduce::<R>(&encircled, max_crossings)?;
    let rhs = reduce::<R>(word, max_crossings)?.scale(&R::delta());
    Ok(lhs.sub(&rhs))
}

/// Relation from band-sliding the bundle over the handle:
/// `reduce(word) - reduce(word with the slide fragment at `at`)`.
/// An empty bundle slides trivially, giving the zero vector.
pub fn slide_relation<R: Coeff>(
    word: &DiagramWord,
    at: usize,
    bundle: usize,
    max_crossings: usize,
) -> Result<SkeinVector<R>, SlideError> {
    check_bundle(word, at, bundle)?;
    if bundle == 0 {
        return Ok(SkeinVector::zero());
    }
    let slid = insert_fragment(word, at, &slide_fragment(bundle))?;
    let lhs = reduce::<R>(word, max_crossings)?;
    let rhs = reduce::<R>(&slid, max_crossings)?;
    Ok(lhs.sub(&rhs))
}

/// Difference between the slid bundle and A^6 times the under-wrapped
/// bundle: `reduce(slide at `at`) - A^6 * reduce(wrap at `at`)`. The two
/// local pictures reduce identically, so the defect vanishes; callers assert
/// exactly that. Bundles of odd size are rejected.
pub fn slide_identity_defect<R: Coeff>(
    word: &DiagramWord,
    at: usize,
    bundle: usize,
    max_crossings: usize,
) -> Result<SkeinVector<R>, SlideError> {
    if bundle % 2 == 1 {
        return Err(SlideError::OddGrading(bundle));
    }
    check_bundle(word, at, bundle)?;
    let slid = insert_fragment(word, at, &slide_fragment(bundle))?;
    let wrapped = insert_fragment(word, at, &wrap_fragment(bundle))?;
    let lhs = reduce::<R>(&slid, max_crossings)?;
    let rhs = reduce::<R>(&wrapped, max_crossings)?.scale(&R::a_pow(6));
    Ok(lhs.sub(&rhs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bracket::DEFAULT_MAX_CROSSINGS;
    use crate::ring::LaurentPoly;
    use crate::surface::{CurveClass, Multicurve};

    fn word(text: &str) -> DiagramWord {
        DiagramWord::parse(text).unwrap()
    }

    fn p(pairs: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(pairs)
    }

    fn mc(words: &[&[u32]]) -> Multicurve {
        Multicurve::from_curves(words.iter().map(|w| CurveClass::from_punctures(w).unwrap()).collect())
    }

    #[test]
    fn fragment_shapes() {
        assert_eq!(
            encircle_fragment(2),
            vec![Column::Cup(0), Column::Over(1), Column::Over(2), Column::Over(2), Column::Over(1), Column::Cap(0)]
        );
        assert_eq!(encircle_fragment(0), vec![Column::Cup(0), Column::Cap(0)]);
        assert_eq!(
            slide_fragment(1),
            vec![Column::Cup(0), Column::Over(1), Column::Over(1), Column::Cap(1), Column::Cup(1), Column::Cap(0)]
        );
        assert!(wrap_fragment(1).is_empty());
        assert_eq!(wrap_fragment(2), vec![Column::Under(0), Column::Under(0)]);
        assert_eq!(
            wrap_fragment(3),
            vec![Column::Under(0), Column::Under(1), Column::Under(1), Column::Under(0)]
        );
    }

    #[test]
    fn encircling_one_strand_links_it() {
        let w = word("surface 1\ncup 0\npunct 1 1\ncap 0");
        let encircled = insert_fragment(&w, 1, &encircle_fragment(1)).unwrap();
        let got: SkeinVector<LaurentPoly> =
            Reducer::new(CrossingOrder::First).reduce(&encircled).unwrap();
        let expect = SkeinVector::basis(mc(&[&[1]])).scale(&p(&[(4, -1), (-4, -1)]));
        assert_eq!(got, expect);
    }

    #[test]
    fn encircle_relation_on_a_wall_pair() {
        // one curve around both punctures of a split surface: bundle 2 at the wall
        let w = word("surface 2 split 1\ncup 0\npunct 1 1\npunct 2 1\ncap 0");
        let rel: SkeinVector<LaurentPoly> =
            encircle_relation(&w, 2, 2, DEFAULT_MAX_CROSSINGS).unwrap();
        let expect = SkeinVector::from_terms(vec![
            (mc(&[&[1, 2]]), p(&[(6, -1), (-6, -1), (2, 1), (-2, 1)])),
            (mc(&[&[1], &[2]]), p(&[(4, -1), (0, 2), (-4, -1)])),
        ]);
        assert_eq!(rel, expect);
    }

    #[test]
    fn encircle_relation_of_empty_bundle_vanishes() {
        let w = word("surface 1\ncup 0\npunct 1 1\ncap 0");
        let rel: SkeinVector<LaurentPoly> =
            encircle_relation(&w, 0, 0, DEFAULT_MAX_CROSSINGS).unwrap();
        assert!(rel.is_zero());
    }

    #[test]
    fn slide_relation_single_winding() {
        let w = word("surface 1\ncup 0\npunct 1 1\ncap 0");
        let rel: SkeinVector<LaurentPoly> = slide_relation(&w, 2, 1, DEFAULT_MAX_CROSSINGS).unwrap();
        let expect = SkeinVector::basis(mc(&[&[1]])).scale(&p(&[(0, 1), (6, -1)]));
        assert_eq!(rel, expect);
    }

    #[test]
    fn slide_relation_double_winding() {
        let w = word("surface 1\ncup 0\ncup 1\npunct 1 2\ncap 1\ncap 0");
        assert_eq!(w.trace_multicurve().unwrap(), (0, mc(&[&[1], &[1]])));
        let rel: SkeinVector<LaurentPoly> = slide_relation(&w, 3, 2, DEFAULT_MAX_CROSSINGS).unwrap();
        let expect = SkeinVector::from_terms(vec![
            (mc(&[&[1], &[1]]), p(&[(0, 1), (8, -1)])),
            (Multicurve::empty(), p(&[(8, 1), (0, -1)])),
        ]);
        assert_eq!(rel, expect);
    }

    #[test]
    fn slide_relation_triple_winding_pivot() {
        let w = word("surface 1\ncup 0\ncup 1\ncup 2\npunct 1 3\ncap 2\ncap 1\ncap 0");
        let z3 = mc(&[&[1], &[1], &[1]]);
        assert_eq!(w.trace_multicurve().unwrap(), (0, z3.clone()));
        let rel: SkeinVector<LaurentPoly> = slide_relation(&w, 4, 3, DEFAULT_MAX_CROSSINGS).unwrap();
        assert_eq!(rel.coeff(&z3), p(&[(0, 1), (10, -1)]));
        for (other, _) in rel.iter() {
            assert!(other == &z3 || other.total_length() < 3, "unexpected term {}", other);
        }
    }

    #[test]
    fn slide_matches_wrap_up_to_unit() {
        // two strands crossing the wall
        let w2 = word("surface 2 split 1\ncup 0\npunct 1 1\npunct 2 1\ncap 0");
        let defect: SkeinVector<LaurentPoly> =
            slide_identity_defect(&w2, 2, 2, DEFAULT_MAX_CROSSINGS).unwrap();
        assert!(defect.is_zero(), "bundle 2 defect: {}", defect);

        // four strands: two parallel wall-crossing curves
        let w4 = word("surface 2 split 1\ncup 0\ncup 1\npunct 1 2\npunct 2 2\ncap 1\ncap 0");
        assert_eq!(w4.trace_multicurve().unwrap(), (0, mc(&[&[1, 2], &[1, 2]])));
        let defect: SkeinVector<LaurentPoly> =
            slide_identity_defect(&w4, 3, 4, DEFAULT_MAX_CROSSINGS).unwrap();
        assert!(defect.is_zero(), "bundle 4 defect: {}", defect);
    }

    #[test]
    fn slide_identity_rejects_odd_bundles() {
        let w = word("surface 1\ncup 0\npunct 1 1\ncap 0");
        for odd in [1usize, 3] {
            match slide_identity_defect::<LaurentPoly>(&w, 1, odd, DEFAULT_MAX_CROSSINGS) {
                Err(SlideError::OddGrading(b)) => assert_eq!(b, odd),
                other => panic!("unexpected {:?}", other),
            }
        }
    }

    #[test]
    fn bundle_larger_than_stack_is_rejected() {
        let w = word("surface 2 split 1\ncup 0\npunct 1 1\npunct 2 1\ncap 0");
        match encircle_relation::<LaurentPoly>(&w, 2, 4, DEFAULT_MAX_CROSSINGS) {
            Err(SlideError::BundleMismatch { at_column: 2, expected: 4, found: 2 }) => {}
            other => panic!("unexpected {:?}", other),
        }
    }
}
