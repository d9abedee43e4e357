from longref.families.catalog import (
    CatalogConfig,
    CatalogEntry,
    catalog,
    gap_check,
    predicted_orders,
    unavailable_entries,
    write_catalog,
)
from longref.families.extensions import deg13_graph, merge_degree_one_pair, pendant_extension
from longref.families.sporadic import SporadicGraph, load_sporadic
from longref.families.tables import TableFamilySpec, table_family, table_members, table_order
