from apps.functions.models.space import *
from apps.functions.models.function import *
from apps.functions.models.result import *
