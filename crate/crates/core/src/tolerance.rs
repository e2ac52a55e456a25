//! Global tolerances. Instances are expected to be normalized so the polygon
//! fits in `[0, 1000]²`.

/// Absolute distance tolerance.
pub const TAU_DIST: f64 = 1e-9;

/// Angular tolerance in radians.
pub const TAU_ANG: f64 = 1e-12;
