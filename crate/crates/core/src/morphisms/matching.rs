//! Perfect-matching enumeration for the mask-completion step of the pair
//! search: position `i` must be assigned a distinct value from
//! `candidates[i]`.

/// Enumerates every complete assignment in lexicographic order of the
/// assignment array. `emit` returns `false` to stop early; the function
/// returns `false` iff enumeration was stopped.
pub(crate) fn for_each_perfect_matching(
    candidates: &[Vec<u16>],
    mut emit: impl FnMut(&[u16]) -> bool,
) -> bool {
    let m = candidates.len();
    let mut assignment = vec![0u16; m];
    let mut used = vec![false; m];
    backtrack(candidates, 0, &mut assignment, &mut used, &mut emit)
}

fn backtrack(
    candidates: &[Vec<u16>],
    i: usize,
    assignment: &mut [u16],
    used: &mut [bool],
    emit: &mut impl FnMut(&[u16]) -> bool,
) -> bool {
    if i == candidates.len() {
        return emit(assignment);
    }
    // candidate lists are kept sorted, so the first completion found is the
    // lexicographically smallest
    for &value in &candidates[i] {
        if used[value as usize] {
            continue;
        }
        used[value as usize] = true;
        assignment[i] = value;
        let keep_going = backtrack(candidates, i + 1, assignment, used, emit);
        used[value as usize] = false;
        if !keep_going {
            return false;
        }
    }
    true
}
