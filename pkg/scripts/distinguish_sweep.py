from pathlib import Path

import pydrantic
from pydrantic.variables import FormatStringVariable

from longref.sweep import DistinguishSweepConfig
from longref.utils import WandBConfig, default_output_dir

file_name = Path(__file__).stem

config = DistinguishSweepConfig(
    max_order=40,
    num_random_pairs=2000,
    seed=0,
    max_workers=8,
    parallelism_strategy="process",

    wandb=WandBConfig(
        project="longref",
        tags=["distinguish", "sweep"],
    ),
    output_dir=default_output_dir(),
    name=FormatStringVariable(f"{file_name}_seed{{seed}}"),
)


if __name__ == "__main__":
    pydrantic.main([config])
