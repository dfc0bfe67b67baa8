//! Cross-checks the resolution path against direct Koszul cohomology dimensions.

use bigraded_lc::cohomology::corpus::{self, CorpusShape};
use bigraded_lc::cohomology::{cohomology_component, KoszulOracle};
use bigraded_lc::field::PrimeField;

fn main() -> anyhow::Result<()> {
    let field = PrimeField::default();
    for ideal in corpus::random_corpus(&field, CorpusShape::default(), 11, 4) {
        let n = ideal.spec().n();
        let gens: Vec<String> = ideal.gens().iter().map(|f| ideal.spec().s().format(f)).collect();
        println!("m={} n={n} ({})", ideal.spec().m(), gens.join(", "));
        let mut oracle = KoszulOracle::new(&ideal);
        for s in 0..=n {
            let j = -(n as i64) - 1;
            let main = cohomology_component(&ideal, s, j)?.presentation;
            let row: Vec<String> = (0..4)
                .map(|i| {
                    let e = oracle.stable_dim(s, i, j, 60).expect("stabilizes");
                    format!("{}/{}", e.dim, main.hilbert_function(i))
                })
                .collect();
            println!("  s {s} j {j}: oracle/main {}", row.join(" "));
        }
    }
    Ok(())
}
