use abfactor::avoidance::CheckKind;
use abfactor::graph::ExtremalParams;
use abfactor::Fraction;
use abfactor_cli::config::{CampaignConfig, KChoice};
use proptest::prelude::*;

fn config() -> impl Strategy<Value = CampaignConfig> {
    (
        proptest::sample::subsequence(CheckKind::ALL.to_vec(), 1..=7),
        (1usize..=12, 0usize..=8),
        proptest::collection::vec((0i64..=10, 1i64..=10), 1..4),
        proptest::collection::vec(any::<u64>(), 1..4),
        proptest::collection::vec((1usize..4, 1usize..4), 0..3),
        proptest::collection::vec(1usize..4, 0..3),
        proptest::collection::vec(
            prop_oneof![Just(KChoice::B), (2usize..5).prop_map(KChoice::Fixed)],
            0..3,
        ),
        (1usize..50, 0usize..100),
        proptest::collection::vec((1usize..3, 1usize..3, 1usize..3, 1usize..3), 0..3),
    )
        .prop_map(
            |(theorems, (lo, span), ps, seeds, ab, ns, ks, (quota, extra), ext)| CampaignConfig {
                theorems,
                n_range: (lo, lo + span),
                p_list: ps
                    .into_iter()
                    .map(|(p, q)| Fraction::new(p.min(q), q))
                    .collect(),
                seed_list: seeds,
                ab: ab.into_iter().map(|(a, d)| (a, a + d)).collect(),
                n: ns.clone(),
                m: ns,
                k: ks,
                quota,
                max_attempts: quota + extra,
                extremal: ext
                    .into_iter()
                    .map(|(m, a, d, n)| ExtremalParams { m, a, b: a + d, n })
                    .collect(),
                ..CampaignConfig::default()
            },
        )
}

proptest! {
    #[test]
    fn display_then_parse_is_identity(cfg in config()) {
        let text = cfg.to_string();
        let back: CampaignConfig = text.parse().unwrap();
        prop_assert_eq!(back, cfg);
    }

    #[test]
    fn parser_never_panics(text in "[a-z_=,:./0-9 \\n#-]{0,200}") {
        let _ = text.parse::<CampaignConfig>();
    }
}
