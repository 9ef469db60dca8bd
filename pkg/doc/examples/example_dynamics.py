# doc/examples/example_dynamics.py

import logging

from qwalk_mub import CoinParams, create_schedule, evolve_schedule
from qwalk_mub.walk import fig2_initial_state, list_scenarios, total_variation

logging.basicConfig(
    level=logging.INFO,
    format="%(asctime)s - %(levelname)s - %(name)s - %(message)s"
)
logger = logging.getLogger("DynamicsExample")

# --- Configuration ---
D = 1063
STEPS = 800
SWITCH_STEP = 100
RECORD_EVERY = 50


def main():
    coin = CoinParams.hadamard()
    state = fig2_initial_state(D)

    for name in ("left", "middle", "right"):
        schedule = create_schedule(name, STEPS, SWITCH_STEP)
        result = evolve_schedule(state, D, coin, schedule, STEPS, record_every=RECORD_EVERY)
        for t, p in zip(result.recorded_steps, result.distributions):
            logger.info(f"{name:<7} t={t:4d}  TV from uniform = {total_variation(p):.4f}")

    logger.info(f"Installed scenarios: {', '.join(list_scenarios())}")


if __name__ == "__main__":
    main()
