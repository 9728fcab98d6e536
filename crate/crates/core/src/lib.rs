//! Exact resultants, discriminants of complete intersections and
//! eigendiscriminants of rational maps of projective spaces.

pub mod coeffring;
pub mod discriminant;
pub mod eigen;
pub mod exactla;
pub mod mpoly;
pub mod resultant;
