#![no_main]

use abfactor_cli::config::CampaignConfig;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(cfg) = text.parse::<CampaignConfig>() {
        let again: CampaignConfig = cfg.to_string().parse().unwrap();
        assert_eq!(again, cfg);
    }
});
