//! Spherical complex parser: no panics, and a validated complex with Euler
//! characteristic 2 has total curvature 4π.

#![no_main]

use fib_core::curvature::{total_curvature, Angle, SphericalComplex};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if data.len() > 8192 {
        return;
    }
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Ok(k) = SphericalComplex::from_json(text) else { return };
    if let Ok(total) = total_curvature(&k) {
        if k.euler_characteristic() == 2 {
            assert_eq!(total, Angle::pi().times(4));
        }
    }
});
