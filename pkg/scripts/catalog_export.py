from pathlib import Path

import pydrantic
from pydrantic.variables import FormatStringVariable

from longref.families import CatalogConfig
from longref.utils import default_output_dir

file_name = Path(__file__).stem

configs = [
    CatalogConfig(
        min_order=1,
        max_order=60,
        degrees=degrees,
        max_workers=8,
        output_dir=default_output_dir(),
        name=FormatStringVariable(f"{file_name}_deg{'_'.join(map(str, degrees))}"),
    )
    for degrees in ([2, 3], [3, 4], [1, 3], [2, 4])
]


if __name__ == "__main__":
    pydrantic.main(configs)
