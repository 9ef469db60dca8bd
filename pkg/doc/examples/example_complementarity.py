# doc/examples/example_complementarity.py

import logging

from qwalk_mub import CoinParams, check_theorem1, mub_check_theta0
from qwalk_mub.complementarity import summarize, sweep

logging.basicConfig(
    level=logging.INFO,
    format="%(asctime)s - %(levelname)s - %(name)s - %(message)s"
)
logger = logging.getLogger("ComplementarityExample")

# --- Configuration ---
PRIME_D = 31
COMPOSITE_D = 33
Q, Q_PRIME = 1, 7


def main():
    coin = CoinParams.hadamard()

    for d in (PRIME_D, COMPOSITE_D):
        report = check_theorem1(d, Q, Q_PRIME, coin)
        logger.info(
            f"d={d}: max overlap^2 = {report.max_squared:.6f}, 1/d = {1 / d:.6f}, "
            f"bound satisfied: {report.bound_satisfied}, violating entries: {report.violation_count}"
        )

    # Diagonal coin: exactly unbiased within each chirality
    check = mub_check_theta0(7, 1, 2)
    logger.info(f"theta=0, d=7: MUB holds = {check.holds} (deviation {check.max_deviation:.2e})")

    rows = sweep([3, 5, 7, 11, 13], coin, max_workers=4)
    summary = summarize(rows)
    logger.info(
        f"Sweep: {summary.cells} cells, {summary.violations} violations, "
        f"max overlap^2 {summary.max_overlap ** 2:.4f} at {summary.max_cell}"
    )


if __name__ == "__main__":
    main()
