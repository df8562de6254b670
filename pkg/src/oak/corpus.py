"""A small built-in repository of wrapped knowledge items.

Thirty descriptors covering the four task kinds with varied completeness,
so searches, reports and the browser have something real to chew on.
Suffixes are assigned positionally (the first entry becomes _001), which
keeps every id stable across builds.
"""

from __future__ import annotations

from .agri import build_ontology, ontology_triples
from .model import Ontology
from .store import TripleStore
from .wrapper import MinedKnowledgeDescriptor, kr_triples, wrap


def _c(concept: str, transformation: str | None = None, state=None, unit=None) -> dict:
    entry: dict = {"concept": concept}
    if transformation is not None:
        entry["transformation"] = transformation
    if state is not None:
        entry["state"] = state
    if unit is not None:
        entry["unit"] = unit
    return entry


def _src(number: int, title: str, year: int) -> dict:
    return {"article_id": f"src-{number:04d}", "title": title, "year": year}


# One dict per stored item; index + 1 is the id suffix.
_DESCRIPTORS: list[dict] = [
    # 1: the fully documented soil classifier.
    {
        "task": "classification",
        "algorithms": ["CPANN", "SKN", "XYF"],
        "conditions": [
            _c("CEC", "cec"), _c("OrganicCarbon", "organic carbon"),
            _c("SoilCa", "soil calcium"), _c("SoilMG", "soil magnesium"),
            _c("SoilMoisture", "soil moisture"), _c("Nitrogen", "nitrogen"),
            _c("SoilPH", "ph tiers"),
        ],
        "targets": [_c("Yield", "yield tier3")],
        "dataset": {"name": "SoilGrid", "size": 1200},
        "evaluation": [{"metric": "Accuracy", "value": 81.2}],
        "locations": ["United Kingdom"],
        "context": ["Wheat"],
        "source": _src(1, "Soil-driven yield banding for winter wheat", 2016),
    },
    # 2: nitrogen response regression.
    {
        "task": "regression",
        "algorithms": ["MLR"],
        "conditions": [_c("Nitrogen"), _c("Rainfall")],
        "targets": [_c("Yield")],
        "dataset": {"name": "TeagascYield", "size": 640},
        "evaluation": [{"metric": "RMSE", "value": 0.42}],
        "locations": ["Ireland"],
        "context": ["Wheat"],
        "source": _src(2, "Rainfall and applied nitrogen in wheat yield response", 2014),
    },
    # 3: high-yield classifier on the public imagery set.
    {
        "task": "classification",
        "algorithms": ["DecisionTree"],
        "conditions": [_c("SoilPH", "ph tiers"), _c("SoilMoisture", "soil moisture")],
        "targets": [_c("Yield", "yield tier3", state="HighYield")],
        "dataset": {"name": "PlantVillage", "size": 5400},
        "evaluation": [{"metric": "Accuracy", "value": 88.0}],
        "locations": ["United Kingdom"],
        "context": ["Wheat"],
        "source": _src(3, "Decision trees for high-yield field screening", 2018),
    },
    # 4: weather clustering.
    {
        "task": "clustering",
        "algorithms": ["KMeans"],
        "conditions": [_c("Temperature", "temperature"), _c("Rainfall", "rainfall")],
        "dataset": {"name": "WeatherGrid", "size": 900},
        "locations": ["Poland"],
        "context": ["Maize"],
        "source": _src(4, "Climate zoning of maize growing regions", 2013),
    },
    # 5: seeding-rate regression.
    {
        "task": "regression",
        "algorithms": ["MLR", "PCA"],
        "conditions": [_c("SeedRate", "seed rate"), _c("SoilMoisture", "soil moisture")],
        "targets": [_c("Yield", "yield")],
        "dataset": {"name": "FieldTrials", "size": 310},
        "evaluation": [{"metric": "R2", "value": 0.78}],
        "locations": ["United Kingdom"],
        "context": ["Wheat"],
        "source": _src(5, "Seeding density effects across moisture gradients", 2015),
    },
    # 6: sparse but acceptable classifier (no subordinal information).
    {
        "task": "classification",
        "algorithms": ["NeuralNetwork"],
        "conditions": [_c("Temperature", "temperature"), _c("Rainfall", "rainfall")],
        "targets": [_c("Yield", "yield tier3")],
        "source": _src(6, "Weather-only yield class prediction", 2011),
    },
    # 7: acidity association rules.
    {
        "task": "association",
        "algorithms": ["Apriori"],
        "conditions": [_c("SoilPH", "ph tiers", state="Strongly acidic")],
        "targets": [_c("Yield", "yield tier3", state="LowYield")],
        "dataset": {"name": "SoilGrid", "size": 1200},
        "evaluation": [{"metric": "Accuracy", "value": 72.5}],
        "locations": ["Ireland"],
        "context": ["Wheat"],
        "source": _src(7, "Acid soils co-occur with depressed wheat yields", 2012),
    },
    # 8: maize yield regression.
    {
        "task": "regression",
        "algorithms": ["MLR"],
        "conditions": [_c("Nitrogen", "nitrogen"), _c("SeedRate", "seed rate")],
        "targets": [_c("Yield", "yield")],
        "dataset": {"name": "MaizeTrials", "size": 450},
        "evaluation": [{"metric": "RMSE", "value": 0.55}],
        "locations": ["Poland"],
        "context": ["Maize"],
        "source": _src(8, "Nitrogen and stand density in maize production", 2017),
    },
    # 9: moisture clustering without location data.
    {
        "task": "clustering",
        "algorithms": ["KMeans"],
        "conditions": [_c("SoilMoisture", "soil moisture"), _c("CEC", "cec")],
        "dataset": {"name": "SoilGrid", "size": 1200},
        "evaluation": [{"metric": "Accuracy", "value": 66.0}],
        "context": ["Wheat"],
        "source": _src(9, "Grouping fields by water-holding behaviour", 2010),
    },
    # 10: rust-risk classifier.
    {
        "task": "classification",
        "algorithms": ["CPANN"],
        "conditions": [_c("Temperature", "temperature"), _c("SoilMoisture", "soil moisture")],
        "targets": [_c("LeafRust")],
        "dataset": {"name": "RustWatch", "size": 220},
        "evaluation": [{"metric": "Accuracy", "value": 79.3}],
        "locations": ["Ireland"],
        "context": ["Wheat"],
        "source": _src(10, "Forecasting leaf rust pressure from field weather", 2019),
    },
    # 11: high-yield regression, Irish sites.
    {
        "task": "regression",
        "algorithms": ["MLR"],
        "conditions": [_c("Nitrogen", "nitrogen"), _c("SoilPH", "soil ph")],
        "targets": [_c("Yield", "yield tier3", state="HighYield")],
        "dataset": {"name": "TeagascYield", "size": 640},
        "evaluation": [{"metric": "R2", "value": 0.81}],
        "locations": ["Ireland"],
        "context": ["Wheat"],
        "source": _src(11, "Which managed fields reach the top yield band", 2020),
    },
    # 12: rice paddy clustering.
    {
        "task": "clustering",
        "algorithms": ["KMeans"],
        "conditions": [_c("Rainfall", "rainfall"), _c("Temperature", "temperature")],
        "dataset": {"name": "PaddyZones", "size": 130},
        "locations": ["Poland"],
        "source": _src(12, "Paddy microclimate segmentation", 2009),
    },
    # 13: organic carbon association.
    {
        "task": "association",
        "algorithms": ["FPGrowth"],
        "conditions": [_c("OrganicCarbon", "organic carbon")],
        "targets": [_c("Yield", "yield tier3", state="MediumYield")],
        "dataset": {"name": "SoilGrid", "size": 1200},
        "locations": ["United Kingdom"],
        "context": ["Wheat"],
        "source": _src(13, "Carbon stocks and mid-band wheat yields", 2015),
    },
    # 14: CEC-led classification.
    {
        "task": "classification",
        "algorithms": ["SKN"],
        "conditions": [_c("CEC", "cec"), _c("SoilCa", "soil calcium")],
        "targets": [_c("Yield", "yield tier3")],
        "evaluation": [{"metric": "Accuracy", "value": 74.1}],
        "locations": ["United Kingdom"],
        "source": _src(14, "Exchange capacity as a yield class signal", 2013),
    },
    # 15: the nitrogen-and-heat regression the walkthroughs point at.
    {
        "task": "regression",
        "algorithms": ["MLR"],
        "conditions": [_c("Nitrogen", "nitrogen"), _c("Temperature", "temperature")],
        "targets": [_c("Yield", "yield")],
        "dataset": {"name": "NitrogenResponse", "size": 520},
        "evaluation": [{"metric": "RMSE", "value": 0.38}],
        "locations": ["Ireland"],
        "context": ["Wheat"],
        "source": _src(15, "Joint nitrogen and temperature yield model", 2021),
    },
    # 16: light classifier, no evaluation reported.
    {
        "task": "classification",
        "algorithms": ["XYF"],
        "conditions": [_c("SoilPH"), _c("Nitrogen")],
        "targets": [_c("Yield")],
        "dataset": {"name": "SoilGrid", "size": 1200},
        "locations": ["Poland"],
        "context": ["Maize"],
        "source": _src(16, "Transferring a soil yield classifier to maize", 2016),
    },
    # 17: rainfall-only regression, sparse metadata.
    {
        "task": "regression",
        "algorithms": ["MLR"],
        "conditions": [_c("Rainfall")],
        "targets": [_c("Yield")],
        "evaluation": [{"metric": "R2", "value": 0.44}],
        "source": _src(17, "How much does rainfall alone explain", 2008),
    },
    # 18: UK high-yield screening with weather inputs.
    {
        "task": "classification",
        "algorithms": ["DecisionTree", "NeuralNetwork"],
        "conditions": [_c("Temperature", "temperature"), _c("Rainfall", "rainfall")],
        "targets": [_c("Yield", "yield tier3", state="HighYield")],
        "dataset": {"name": "MetFields", "size": 780},
        "evaluation": [{"metric": "Accuracy", "value": 83.6}],
        "locations": ["United Kingdom"],
        "context": ["Wheat"],
        "source": _src(18, "Season weather windows for top-band wheat", 2019),
    },
    # 19: soil moisture association.
    {
        "task": "association",
        "algorithms": ["Apriori"],
        "conditions": [_c("SoilMoisture", "soil moisture")],
        "targets": [_c("Yield", "yield tier3", state="MediumYield")],
        "locations": ["Ireland"],
        "context": ["Rice"],
        "source": _src(19, "Moisture bands in rice yield records", 2014),
    },
    # 20: full-profile maize classifier.
    {
        "task": "classification",
        "algorithms": ["CPANN", "DecisionTree"],
        "conditions": [
            _c("Nitrogen", "nitrogen"), _c("SoilPH", "ph tiers"),
            _c("SeedRate", "seed rate"),
        ],
        "targets": [_c("Yield", "yield tier3")],
        "dataset": {"name": "MaizeTrials", "size": 450},
        "evaluation": [{"metric": "Accuracy", "value": 77.9}],
        "locations": ["Poland"],
        "context": ["Maize"],
        "source": _src(20, "Agronomy-complete maize yield banding", 2018),
    },
    # 21: temperature clustering, minimal extras.
    {
        "task": "clustering",
        "algorithms": ["KMeans"],
        "conditions": [_c("Temperature", "temperature")],
        "dataset": {"name": "WeatherGrid", "size": 900},
        "evaluation": [{"metric": "Accuracy", "value": 61.0}],
        "locations": ["United Kingdom"],
        "context": ["Wheat"],
        "source": _src(21, "Thermal regime grouping of trial sites", 2012),
    },
    # 22: disease imagery classifier on the public set.
    {
        "task": "classification",
        "algorithms": ["NeuralNetwork"],
        "conditions": [_c("SoilMoisture", "soil moisture"), _c("Temperature", "temperature")],
        "targets": [_c("LeafRust")],
        "dataset": {"name": "PlantVillage", "size": 5400},
        "evaluation": [{"metric": "Accuracy", "value": 91.4}],
        "locations": ["Poland"],
        "context": ["Wheat"],
        "source": _src(22, "Imagery-backed rust incidence modelling", 2021),
    },
    # 23: calcium/magnesium regression.
    {
        "task": "regression",
        "algorithms": ["PCA", "MLR"],
        "conditions": [_c("SoilCa", "soil calcium"), _c("SoilMG", "soil magnesium")],
        "targets": [_c("Yield", "yield")],
        "dataset": {"name": "SoilGrid", "size": 1200},
        "evaluation": [{"metric": "R2", "value": 0.52}],
        "locations": ["Ireland"],
        "source": _src(23, "Base cation balance and wheat output", 2011),
    },
    # 24: neutral-pH association.
    {
        "task": "association",
        "algorithms": ["FPGrowth"],
        "conditions": [_c("SoilPH", "ph tiers", state="Neutral")],
        "targets": [_c("Yield", "yield tier3", state="HighYield")],
        "dataset": {"name": "SoilGrid", "size": 1200},
        "evaluation": [{"metric": "Accuracy", "value": 69.8}],
        "locations": ["United Kingdom"],
        "context": ["Wheat"],
        "source": _src(24, "Neutral soils in the top yield band", 2017),
    },
    # 25: rice weather regression.
    {
        "task": "regression",
        "algorithms": ["MLR"],
        "conditions": [_c("Rainfall", "rainfall"), _c("Temperature", "temperature")],
        "targets": [_c("Yield", "yield")],
        "dataset": {"name": "PaddyZones", "size": 130},
        "evaluation": [{"metric": "RMSE", "value": 0.61}],
        "locations": ["Poland"],
        "context": ["Rice"],
        "source": _src(25, "Monsoon-free climates and paddy yield", 2013),
    },
    # 26: soil chemistry clustering, full metadata.
    {
        "task": "clustering",
        "algorithms": ["KMeans"],
        "conditions": [
            _c("CEC", "cec"), _c("OrganicCarbon", "organic carbon"),
            _c("SoilPH", "soil ph"),
        ],
        "dataset": {"name": "SoilGrid", "size": 1200},
        "evaluation": [{"metric": "Accuracy", "value": 64.5}],
        "locations": ["Ireland"],
        "context": ["Wheat"],
        "source": _src(26, "Chemistry-led grouping of tillage soils", 2015),
    },
    # 27: late-season UK screening.
    {
        "task": "classification",
        "algorithms": ["SKN", "XYF"],
        "conditions": [_c("Nitrogen", "nitrogen"), _c("SoilMoisture", "soil moisture")],
        "targets": [_c("Yield", "yield tier3", state="HighYield")],
        "dataset": {"name": "MetFields", "size": 780},
        "evaluation": [{"metric": "Accuracy", "value": 80.2}],
        "locations": ["United Kingdom"],
        "context": ["Wheat"],
        "source": _src(27, "Late-season nutrient and water status screening", 2020),
    },
    # 28: fertiliser association without dataset.
    {
        "task": "association",
        "algorithms": ["Apriori"],
        "conditions": [_c("Nitrogen", "nitrogen")],
        "targets": [_c("Yield", "yield tier3", state="MediumYield")],
        "evaluation": [{"metric": "Accuracy", "value": 58.7}],
        "locations": ["Poland"],
        "context": ["Maize"],
        "source": _src(28, "Fertiliser records against maize yield bands", 2010),
    },
    # 29: organic carbon regression.
    {
        "task": "regression",
        "algorithms": ["MLR"],
        "conditions": [_c("OrganicCarbon", "organic carbon"), _c("CEC", "cec")],
        "targets": [_c("Yield", "yield")],
        "dataset": {"name": "FieldTrials", "size": 310},
        "evaluation": [{"metric": "R2", "value": 0.69}],
        "locations": ["United Kingdom"],
        "context": ["Wheat"],
        "source": _src(29, "Carbon-rich soils and yield stability", 2019),
    },
    # 30: wide-input wheat classifier.
    {
        "task": "classification",
        "algorithms": ["CPANN", "SKN"],
        "conditions": [
            _c("SoilPH", "ph tiers"), _c("Nitrogen", "nitrogen"),
            _c("Temperature", "temperature"), _c("Rainfall", "rainfall"),
        ],
        "targets": [_c("Yield", "yield tier3")],
        "dataset": {"name": "SoilGrid", "size": 1200},
        "evaluation": [{"metric": "Accuracy", "value": 76.4}],
        "locations": ["Ireland"],
        "context": ["Wheat"],
        "source": _src(30, "Combined soil and weather yield banding", 2022),
    },
]


def demo_descriptors() -> list[MinedKnowledgeDescriptor]:
    return [MinedKnowledgeDescriptor.from_dict(d) for d in _DESCRIPTORS]


def build_demo_repository(ontology: Ontology | None = None) -> TripleStore:
    """A store holding the ontology plus all thirty wrapped items."""
    if ontology is None:
        ontology = build_ontology()
    store = TripleStore()
    store.insert_many(ontology_triples(ontology))
    for position, descriptor in enumerate(demo_descriptors(), start=1):
        kr = wrap(descriptor, ontology, suffix=position)
        store.insert_many(kr_triples(kr, ontology))
    return store
