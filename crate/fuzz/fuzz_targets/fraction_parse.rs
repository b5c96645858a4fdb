#![no_main]

use abfactor::Fraction;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(s) = std::str::from_utf8(data) {
        if let Ok(f) = s.parse::<Fraction>() {
            assert_eq!(f.to_string().parse::<Fraction>().unwrap(), f);
        }
    }
});
