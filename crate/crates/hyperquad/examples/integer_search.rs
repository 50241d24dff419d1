//! Desk-scale surveys: enumerate integer Diophantine tuples, split the
//! work into shards, and emit CSV.
//!
//! Run with `cargo run --release --example integer_search`.

use hyperquad::search::{
    classify_regular, enumerate_diophantine, merge_shards, write_csv, SearchConfig,
};

fn main() {
    let pairs = enumerate_diophantine(&SearchConfig::new(20, 2));
    println!("Diophantine pairs up to 20: {}", pairs.len());

    let triples = enumerate_diophantine(&SearchConfig::new(200, 3));
    println!("Diophantine triples up to 200: {}", triples.len());

    println!("\nquadruples up to 600, as CSV with witnesses and regularity:");
    let quadruples = enumerate_diophantine(&SearchConfig::new(600, 4));
    let mut csv = Vec::new();
    write_csv(&quadruples, &mut csv).expect("all enumerated tuples verify");
    print!("{}", String::from_utf8(csv).unwrap());
    assert!(quadruples.iter().all(classify_regular));
    println!("all {} of them are regular", quadruples.len());

    let shards: Vec<_> = (0..4)
        .map(|index| {
            enumerate_diophantine(&SearchConfig {
                shard: Some((index, 4)),
                ..SearchConfig::new(600, 4)
            })
        })
        .collect();
    println!(
        "\nthe same survey in 4 shards of sizes {:?} merges identically: {}",
        shards.iter().map(Vec::len).collect::<Vec<_>>(),
        merge_shards(shards) == quadruples
    );
}
