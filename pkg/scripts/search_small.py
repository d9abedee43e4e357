from pathlib import Path

import pydrantic
from pydrantic.variables import FormatStringVariable

from longref.search import SearchConfig
from longref.utils import default_output_dir

file_name = Path(__file__).stem

configs = [
    SearchConfig(
        orders=list(range(10, 15)),
        degrees=degrees,
        max_seconds=3600,
        parallelism_strategy="process",
        output_dir=default_output_dir(),
        name=FormatStringVariable(f"{file_name}_deg{'_'.join(map(str, degrees))}"),
    )
    for degrees in ([2, 3], [3, 4])
]


if __name__ == "__main__":
    pydrantic.main(configs)
