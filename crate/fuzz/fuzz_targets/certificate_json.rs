#![no_main]

use abfactor::factor::FactorCertificate;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(cert) = serde_json::from_slice::<FactorCertificate>(data) {
        let text = serde_json::to_string(&cert).unwrap();
        let back: FactorCertificate = serde_json::from_str(&text).unwrap();
        assert_eq!(back.exists(), cert.exists());
    }
});
