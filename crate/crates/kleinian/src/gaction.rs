//! The automorphism group preserving xy - yx.
