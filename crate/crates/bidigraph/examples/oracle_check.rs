//! Engine versus brute force: replay the oracle-equivalence check on a
//! seeded batch of random graphs.
//!
//! Run with: cargo run --release --example oracle_check

use bidigraph::oracle::{check_engine_oracle_agreement, random_graph, OracleConfig};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() {
    let cfg = OracleConfig {
        max_vertices: 6,
        max_edges: 9,
        max_chain_length: None,
    };
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    let cases = 200;
    for i in 0..cases {
        let g = random_graph(&mut rng, cfg.max_vertices, cfg.max_edges);
        match check_engine_oracle_agreement(&g, &cfg) {
            Ok(()) => {}
            Err(msg) => {
                eprintln!("case {i}: engine and oracle disagree: {msg}");
                std::process::exit(1);
            }
        }
        if (i + 1) % 50 == 0 {
            println!("{} cases agree", i + 1);
        }
    }
    println!("all {cases} cases agree on b-paths, closure, reductions, circuits and rank");
}
