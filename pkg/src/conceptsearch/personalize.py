"""Profile-based score personalization and click-history re-ranking."""

from __future__ import annotations

import math
from typing import Collection, Sequence

from .clicklog import ClickLog
from .profiles import UserProfile

# Significance of each profile component in the re-scoring boost. Fixed by
# design; exposed read-only through Config.
OCCUPATION_BOOST = 0.5
HOBBY_BOOST = 0.3
GENDER_BOOST = 0.2


def gender_flag(
    doc_tokens: Collection[str],
    profile: UserProfile,
    lexicon: dict[str, Collection[str]] | None,
) -> int:
    """1 iff the profile declares a gender and the doc mentions a marker term
    configured for that gender; always 0 for gender 'unspecified'."""
    if profile.gender == "unspecified" or not lexicon:
        return 0
    markers = lexicon.get(profile.gender)
    if not markers:
        return 0
    marker_set = set(markers)
    return 1 if any(tok in marker_set for tok in doc_tokens) else 0


def personalize_score(
    score: float,
    topscore: float,
    lastscore: float,
    occupation_match: float = 0.0,
    hobby_match: float = 0.0,
    gender_match: int = 0,
) -> float:
    """Re-score one result against the user's profile.

    newscore = score * (1 + 0.5*occ + 0.3*hobby + 0.2*gender)
                     * (1 + (topscore - score) / (topscore - lastscore))

    The second factor is 1 when topscore equals lastscore. With matches in
    [0, 1] the result stays within [score, 4*score].
    """
    boost = 1.0 + OCCUPATION_BOOST * occupation_match + HOBBY_BOOST * hobby_match
    boost += GENDER_BOOST * gender_match
    if topscore == lastscore:
        spread = 1.0
    else:
        spread = 1.0 + (topscore - score) / (topscore - lastscore)
    return score * boost * spread


def history_target_rank(
    rank: int,
    in_history: bool,
    user_clicks: int,
    hot: bool,
    global_clicks: int,
) -> int:
    """Adjusted rank floor(sqrt(r) / (s*log2(2+n1) + h*log2(2+n2))), min 1.

    ``global_clicks`` only enters when the doc is a hot link.
    """
    if rank < 1:
        raise ValueError("rank must be >= 1")
    denom = 0.0
    if in_history:
        denom += math.log2(2 + user_clicks)
    if hot:
        denom += math.log2(2 + global_clicks)
    if denom == 0.0:
        return rank
    return max(1, math.floor(math.sqrt(rank) / denom))


def history_rerank(
    ranked_docs: Sequence[str],
    clicks: ClickLog,
    user_id: str | None,
) -> list[str]:
    """Move clicked and hot documents toward their adjusted ranks.

    Docs with neither user-history nor hot-link signal keep their relative
    order and fill the slots the adjusted docs do not claim. The output is a
    permutation of the input.
    """
    adjusted: list[tuple[int, int, str]] = []  # (target rank, original rank, doc)
    unadjusted: list[str] = []
    for position, doc_id in enumerate(ranked_docs, start=1):
        n1 = clicks.user_count(user_id, doc_id)
        n2 = clicks.global_count(doc_id)
        in_history = n1 > 0
        hot = clicks.is_hot(doc_id)
        if in_history or hot:
            target = history_target_rank(position, in_history, n1, hot, n2)
            adjusted.append((target, position, doc_id))
        else:
            unadjusted.append(doc_id)
    if not adjusted:
        return list(ranked_docs)
    adjusted.sort()
    result: list[str] = []
    ai = ui = 0
    for slot in range(1, len(ranked_docs) + 1):
        take_adjusted = ai < len(adjusted) and (
            adjusted[ai][0] <= slot or ui >= len(unadjusted)
        )
        if take_adjusted:
            result.append(adjusted[ai][2])
            ai += 1
        else:
            result.append(unadjusted[ui])
            ui += 1
    return result
