//! Fractional right ideals: localized element arithmetic, transition
//! elements, ideal constructors, graded ladders, and point reconstruction.

pub mod loc;
pub mod series;
