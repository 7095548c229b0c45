//! The decomposition depends on which region the base point lives in, but
//! the pointwise sum never does: sweep one base point per region of the
//! square's wall arrangement and compare.

use polymac::decomposition::{
    decomposition_terms, in_open_chamber, region_signature, Polarization, Weights,
};
use polymac::polytope::builtins;
use polymac::rational::{format_point, rat, rat_int};
use polymac::samples::{sample_points, SamplePolicy};

fn main() {
    let p = builtins::square();
    let cuts = [rat_int(-1), rat_int(0), rat_int(1), rat_int(2)];
    let mut epsilons = Vec::new();
    for ix in 0..3 {
        for iy in 0..3 {
            let ex = (&cuts[ix] + &cuts[ix + 1]) / rat_int(2) + rat(1, 17);
            let ey = (&cuts[iy] + &cuts[iy + 1]) / rat_int(2) + rat(1, 23);
            epsilons.push(vec![ex, ey]);
        }
    }
    let w = Weights::from_rationals(&[rat(1, 2), rat(1, 3), rat(2, 5), rat(3, 4)]);
    let points = sample_points(&p, &SamplePolicy { seed: 9, ..Default::default() });

    let mut signatures = Vec::new();
    let mut all_sums: Vec<Vec<_>> = Vec::new();
    for eps in &epsilons {
        assert!(in_open_chamber(&p, eps));
        let sig = region_signature(&p, eps, Polarization::Toward).unwrap();
        let flips: usize = sig.iter().map(|(f, _)| f.iter().filter(|&&x| x).count()).sum();
        let live = sig.iter().filter(|(_, phi)| *phi).count();
        println!(
            "region at {:<18} total flips {:>2}, surviving terms {:>2}/9",
            format_point(eps),
            flips,
            live
        );
        signatures.push(sig);
        let terms = decomposition_terms(&p, eps, Polarization::Toward).unwrap();
        all_sums.push(points.iter().map(|x| terms.sum_at(&w, x)).collect());
    }
    for i in 0..signatures.len() {
        for j in (i + 1)..signatures.len() {
            assert_ne!(signatures[i], signatures[j], "regions must differ");
        }
    }
    let identical = all_sums.windows(2).all(|w2| w2[0] == w2[1]);
    println!(
        "\n9 distinct regions, pointwise sums identical across all of them at {} points: {identical}",
        points.len()
    );
}
