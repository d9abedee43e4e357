from pathlib import Path

import pydrantic
from pydrantic.variables import FormatStringVariable

from longref.search import CrossValidateConfig, CrossValidationTarget
from longref.utils import WandBConfig, default_output_dir

file_name = Path(__file__).stem

config = CrossValidateConfig(
    targets=[
        CrossValidationTarget(orders=list(range(2, 13)), degrees=[2, 3]),
        *(
            CrossValidationTarget(orders=list(range(2, 11)), degrees=degrees)
            for degrees in ([1, 2], [1, 3], [1, 4], [2, 4], [3, 4])
        ),
    ],
    max_seconds=600,
    parallelism_strategy="process",

    wandb=WandBConfig(
        project="longref",
        tags=["search", "cross-validate"],
    ),
    output_dir=default_output_dir(),
    name=FormatStringVariable(f"{file_name}"),
)


if __name__ == "__main__":
    pydrantic.main([config])
