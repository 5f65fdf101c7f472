//! Kauffman bracket skein module calculator for thickened punctured disks.
//!
//! The library reduces framed-link diagrams over a disk with marked
//! punctures to the free basis of embedded multicurves, generates
//! handle-sliding relations for surgery presentations, and computes quotient
//! module presentations over Z[A, A^-1] and Q(A).

pub mod bracket;
pub mod presentation;
pub mod ring;
pub mod sliding;
pub mod surface;
pub mod verify;
