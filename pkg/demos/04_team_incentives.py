"""Team agents: standings awareness, tanking, and resting.
=========================================================

The extended model lets teams react to the standings: an eliminated team
that kept its draft pick plays worse (tanking), and a clinched team eases
off in its last few games (resting). Both are simple rating adjustments.
"""

from pathlib import Path

from courtsim import (
    EraRules,
    Interval,
    Model,
    SimulationConfig,
    accuracy,
    compute_standings,
    load_bundle,
    method,
    playoff_status,
    run_replications,
)

DATA = Path(__file__).resolve().parent.parent / "data" / "fixtures" / "minileague"

# The fixture league has 3-team conferences; the real NBA thresholds (top 8
# clinch, 9th eliminated) would never bind, so this demo overrides the era:
# 2nd place clinches, 3rd is out.
era = EraRules(classify_rank=2, eliminate_rank=3)
bundle = load_bundle(DATA, era_overrides={"2016-2017": era})
dataset = bundle.season("2016-2017")

# Watch each team's playoff status resolve as the season progresses.
checkpoints = [0, len(dataset.games) // 2, 3 * len(dataset.games) // 4, len(dataset.games)]
print("playoff status by games played:")
print(f"{'team':<6}" + "".join(f"after {k:>3} " for k in checkpoints))
for team in dataset.teams:
    row = f"{team:<6}"
    for k in checkpoints:
        snapshot = compute_standings(dataset, k)
        status = playoff_status(team, snapshot, era)
        marker = {"classified": "IN ", "eliminated": "OUT", "contending": "..."}[status.value]
        standing = snapshot.standing(team)
        row += f"{marker} {standing.wins:>2}-{standing.losses:<2}  "
    print(row)

own = [t for t in dataset.teams if dataset.owns_pick(t)]
print(f"\nteams owning their next first-round pick: {', '.join(own)}")
print("(only those have the incentive to tank once eliminated)\n")

# Basic vs extended: the incentive adjustments only touch late-season games
# of already-decided teams. With this league's deliberately tight thresholds
# teams get decided early and the adjustment is blunt. At NBA scale, where
# clinching happens late, the extended model modestly improves every method.
for method_id in ("ii", "vi"):
    for model in (Model.BASIC, Model.EXTENDED):
        config = SimulationConfig(method=method(method_id), model=model,
                                  replications=1000, master_seed=99)
        results = run_replications(dataset, config)
        report = accuracy(results, dataset, config, Interval.SECOND_HALF)
        print(f"method ({method_id}) {model.value:<8} second-half accuracy: {report.mean_accuracy:.1%}")
