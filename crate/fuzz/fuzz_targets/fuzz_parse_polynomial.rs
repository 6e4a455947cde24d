#![no_main]

use std::sync::OnceLock;

use libfuzzer_sys::fuzz_target;
use linkage::field::PrimeField;
use linkage::ring::Ring;

fn ring() -> &'static Ring {
    static RING: OnceLock<Ring> = OnceLock::new();
    RING.get_or_init(|| {
        Ring::polynomial_ring(
            PrimeField::new(101).unwrap(),
            vec!["x".into(), "y".into(), "z".into()],
        )
        .unwrap()
    })
}

fuzz_target!(|data: &[u8]| {
    if let Ok(text) = std::str::from_utf8(data) {
        let _ = linkage::session::parse_polynomial(text, ring());
    }
});
