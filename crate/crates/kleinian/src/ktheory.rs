//! K_0(Z_m) class arithmetic.
