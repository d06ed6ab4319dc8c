//! Seeded random labeled posets.

use nu_tamari_core::posets::{Cover, LabeledPoset};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// A random poset with at most `max_elements` elements and `k ≤ max_k`.
///
/// Elements are numbered along a random linear extension; every pair is
/// related with a random density, and the result is transitively reduced.
pub fn random_poset(rng: &mut impl Rng, max_elements: usize, max_k: u32) -> LabeledPoset {
    let n = rng.gen_range(1..=max_elements);
    let k = rng.gen_range(1..=max_k);
    let density: f64 = rng.gen_range(0.1..0.7);
    let elements: Vec<String> = (0..n).map(|i| format!("p{i}")).collect();
    let mut pairs = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if rng.gen_bool(density) {
                pairs.push((a, b));
            }
        }
    }
    let covers = nu_tamari_core::posets::transitive_reduction(&elements, &pairs)
        .expect("pairs respect the numbering")
        .into_iter()
        .map(|(lower, upper)| Cover {
            lower,
            upper,
            label: rng.gen_range(0..=k),
        })
        .collect();
    LabeledPoset::from_index_covers(elements, covers, k).expect("reduced order")
}

/// The `i`-th poset of a fuzz run; each case has its own stream.
pub fn fuzz_case(seed: u64, i: u64) -> LabeledPoset {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(i);
    random_poset(&mut rng, 10, 3)
}
