use clap::{Args, ValueEnum};
use serde_json::{json, Value};
use tiered::bijections::{
    cnat_to_tiered, cycle_insertion, cycle_insertion_inverse, decompose, perm_to_tree,
    permutation_from_cycle_notation, tiered_to_cnat, tree_to_perm, Cnat, InsertionSlot, Permutation,
};
use tiered::permweight::{descents, partition_to_perm, perm_to_partition, perm_weight, SetPartition};
use tiered::trees::{TieredTree, TreeCandidate};
use tiered::weight::tree_weight;
use tiered::Error;

use crate::{CliResult, Failure};

#[derive(Args, Debug)]
pub struct BijectionArgs {
    #[arg(value_enum)]
    name: BijectionName,

    /// Permutation (compact 0-based symbols such as `8594673201`, or a
    /// comma-separated 1-based list), partition (`25|6130|798|4`), cycle
    /// notation (`(237)(418)(69)(5)`), or tree / CNAT JSON, depending on the
    /// bijection and direction.
    input: String,

    /// Run the map backwards.
    #[arg(long)]
    inverse: bool,

    /// Cycle insertion slot: a letter of the input permutation, or `own`.
    #[arg(long, default_value = "own")]
    slot: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum BijectionName {
    PermTree,
    PartitionPerm,
    CycleInsert,
    CnatTiered,
}

fn perm_json(pi: &Permutation) -> Value {
    json!({
        "word": pi.word(),
        "symbols": pi.to_symbols(),
        "descents": descents(pi),
        "weight": perm_weight(pi),
    })
}

fn tree_json(t: &TieredTree) -> Value {
    json!({
        "tree": serde_json::to_value(t).expect("serializable"),
        "maxima": if t.is_maxmin() { json!(t.maxima()) } else { Value::Null },
        "weight": tree_weight(t),
    })
}

fn parse_tree(s: &str) -> CliResult<TieredTree> {
    let c: TreeCandidate =
        serde_json::from_str(s).map_err(|e| Failure::Usage(format!("tree JSON: {e}")))?;
    Ok(c.validate().map_err(Error::from)?)
}

fn parse_slot(s: &str) -> CliResult<InsertionSlot> {
    if s.trim() == "own" {
        return Ok(InsertionSlot::OwnCycle);
    }
    s.trim()
        .parse()
        .map(InsertionSlot::After)
        .map_err(|_| Failure::Usage(format!("slot must be a letter or `own`, got {s:?}")))
}

fn slot_json(slot: InsertionSlot) -> Value {
    match slot {
        InsertionSlot::After(a) => json!(a),
        InsertionSlot::OwnCycle => json!("own"),
    }
}

fn output(args: &BijectionArgs) -> CliResult<Value> {
    let input = args.input.trim();
    Ok(match (args.name, args.inverse) {
        (BijectionName::PermTree, false) => {
            let pi = Permutation::parse(input)?;
            let t = perm_to_tree(&pi);
            json!({ "permutation": perm_json(&pi), "image": tree_json(&t) })
        }
        (BijectionName::PermTree, true) => {
            let t = parse_tree(input)?;
            let pi = tree_to_perm(&t)?;
            json!({ "tree": tree_json(&t), "image": perm_json(&pi) })
        }
        (BijectionName::PartitionPerm, false) => {
            let p = SetPartition::parse(input)?;
            let pi = partition_to_perm(&p);
            json!({ "partition": p.blocks(), "image": perm_json(&pi) })
        }
        (BijectionName::PartitionPerm, true) => {
            let pi = Permutation::parse(input)?;
            let p = perm_to_partition(&pi)?;
            json!({ "permutation": perm_json(&pi), "image": { "partition": p.blocks(), "text": p.to_string() } })
        }
        (BijectionName::CycleInsert, false) => {
            let sigma = permutation_from_cycle_notation(input, None)?;
            let slot = parse_slot(&args.slot)?;
            let pi = cycle_insertion(&sigma, slot)?;
            let d = decompose(&pi);
            json!({
                "cycles": sigma.cycles(),
                "slot": slot_json(slot),
                "image": perm_json(&pi),
                "blocks": d.blocks,
                "right": d.right,
                "block_count": d.block_count(),
            })
        }
        (BijectionName::CycleInsert, true) => {
            let pi = Permutation::parse(input)?;
            let (sigma, slot) = cycle_insertion_inverse(&pi)?;
            json!({
                "permutation": perm_json(&pi),
                "block_count": decompose(&pi).block_count(),
                "image": { "cycles": sigma.cycles(), "slot": slot_json(slot) },
            })
        }
        (BijectionName::CnatTiered, false) => {
            let c: Cnat =
                serde_json::from_str(input).map_err(|e| Failure::Usage(format!("CNAT JSON: {e}")))?;
            let t = cnat_to_tiered(&c);
            json!({ "cnat": serde_json::to_value(&c).expect("serializable"), "image": tree_json(&t) })
        }
        (BijectionName::CnatTiered, true) => {
            let t = parse_tree(input)?;
            let c = tiered_to_cnat(&t)?;
            json!({ "tree": tree_json(&t), "image": serde_json::to_value(&c).expect("serializable") })
        }
    })
}

pub fn run(args: &BijectionArgs) -> CliResult<()> {
    let v = output(args)?;
    crate::emit(&format!("{}\n", serde_json::to_string_pretty(&v).expect("serializable")))
}
