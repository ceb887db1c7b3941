from typing import Tuple

import networkx as nx

from simjoin.models import ThresholdView


def connected_components(view: ThresholdView) -> Tuple[int, ...]:
    """Component id per node; ids are dense in order of each component's smallest node."""
    component = [-1] * view.node_count
    members = sorted(nx.connected_components(view.to_networkx()), key=min)
    for component_id, nodes in enumerate(members):
        for v in nodes:
            component[v] = component_id
    return tuple(component)


def component_count(view: ThresholdView) -> int:
    return nx.number_connected_components(view.to_networkx())
