//! Turns a joint degree matrix into a skeleton instance and realizes it.

use skelreal::explorer::{enumerate_realizations, EnumerationMode, OracleLimit};
use skelreal::skeleton::jdm_to_skeleton;

fn main() -> skelreal::Result<()> {
    // Rows and columns are degrees 1, 2, 3. The diagonal counts edges inside a class.
    let jdm = vec![vec![0, 1, 2], vec![1, 1, 1], vec![2, 1, 3]];
    let Some((d, s)) = jdm_to_skeleton(&jdm)? else {
        println!("the matrix does not describe any graph");
        return Ok(());
    };
    println!("d = {:?}", d.0);
    for (i, bone) in s.bones().iter().enumerate() {
        println!(
            "bone {i}: classes {} and {}, weight {:?}",
            bone.a, bone.b, bone.weight
        );
    }
    let r = enumerate_realizations(&d, &s, EnumerationMode::Consistent, &OracleLimit::default())?;
    println!("{} consistent realizations", r.len());
    if let Some(g) = r.get(0) {
        println!("first: {:?}", g.edge_set());
    }
    Ok(())
}
