//! Pfaffians, Plücker relations, rank-2 wedges, and the signed-Pfaffian map.
//!
//!     cargo run --example plucker_basics

use qfano_verify::pfaffian::{mu_map, plucker_values, wedge2, SkewPolyMatrix5, PAIRS};
use qfano_verify::rat_i;
use qfano_verify::ring::WeightedRing;
use qfano_verify::Rat;

fn main() {
    // the generic skew-symmetric 5x5 matrix A(t)
    let names: Vec<String> = PAIRS.iter().map(|(i, j)| format!("t{i}{j}")).collect();
    let refs: Vec<(&str, u64)> = names.iter().map(|n| (n.as_str(), 1)).collect();
    let ring = WeightedRing::new(&refs);
    let a = SkewPolyMatrix5::generic(&ring, |i, j| format!("t{i}{j}")).unwrap();

    println!("the five Plücker relations of the generic matrix:");
    for (idx, p) in [[1, 2, 3, 4], [1, 2, 3, 5], [1, 2, 4, 5], [1, 3, 4, 5], [2, 3, 4, 5]]
        .iter()
        .zip(a.plucker().polys())
    {
        println!("  Pf_{}{}{}{} = {}", idx[0], idx[1], idx[2], idx[3], p);
    }

    // a rank-2 point kills all five
    let e = |k: usize| -> [Rat; 5] { std::array::from_fn(|i| rat_i((i + 1 == k) as i64)) };
    let line = wedge2(&e(1), &e(2));
    println!("\nplucker values at e1 ∧ e2: {:?}", plucker_values(&line).map(|v| v.to_string()));
    println!("mu at a rank-2 point: {:?}", mu_map(&line).err().map(|e| e.to_string()));

    // a rank-4 point has a well-defined signed-Pfaffian image that
    // annihilates its spanning vectors
    let mut rank4: [Rat; 10] = Default::default();
    for (k, v) in wedge2(&e(1), &e(2)).into_iter().enumerate() {
        rank4[k] = v;
    }
    for (k, v) in wedge2(&e(3), &e(4)).into_iter().enumerate() {
        rank4[k] += v;
    }
    let z = mu_map(&rank4).unwrap();
    println!("mu(e1∧e2 + e3∧e4) = {:?}", z.clone().map(|v| v.to_string()));
    for k in 1..=4 {
        let dot: Rat = (0..5).map(|i| z[i].clone() * e(k)[i].clone()).sum();
        assert_eq!(dot, rat_i(0));
    }
    println!("the image annihilates e1, e2, e3, e4 — it is the hyperplane they span");
}
