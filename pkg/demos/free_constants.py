"""Walk through the constants of the basic derivation on two free generators."""
from weitzenbock import FreeAssoc, LinearDerivation, kernel_at, highest_weight_test

free = FreeAssoc(2)
d = LinearDerivation.basic(2)

for n in range(7):
    kb = kernel_at(free, d, degree=n)
    print("degree %d: %d constants" % (n, kb.dimension))

kb = kernel_at(free, d, multidegree=(2, 1))
for f in kb.basis:
    print("  ", f.to_str(), "highest weight:", highest_weight_test(f, (2, 1)))
