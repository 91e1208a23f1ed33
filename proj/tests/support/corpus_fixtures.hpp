#pragma once

namespace groundkit::testing {

// One definition per validity class, one patchable entry, one polysemy
// pair. Expected statuses, in order: Valid, WrongRoot, MissingArg1,
// NonAtomicDefined, MissingArg2, Patched, Valid, Valid (bank.1 is then
// dropped by sense selection).
inline constexpr const char* kEightEntryCorpus = R"(# ::id apple.0
# ::snt apple is defined as a red round fruit
(d / define-01
   :ARG1 (a / apple)
   :ARG2 (f / fruit
      :mod (r / red)
      :mod (r2 / round)))

# ::id contrast.0
(c / contrast-01
   :ARG1 (d / define-01
      :ARG1 (x / xenon)
      :ARG2 (g / gas))
   :ARG2 (d2 / define-01
      :ARG1 (x2 / xylem)
      :ARG2 (t / tissue)))

# ::id argless.0
(d / define-01
   :ARG2 (v / void))

# ::id nonatomic.0
(d / define-01
   :ARG1 (p / phrase
      :mod (l / long))
   :ARG2 (u / unit))

# ::id orphan.0
(d / define-01
   :ARG1 (o / orphan))

# ::id wacky.0
# ::def-amr (s / silly :manner (w2 / way :mod (e / exciting)))
(d / define-01
   :ARG1 (w / wacky))

# ::id bank.0
(d / define-01
   :ARG1 (b / bank)
   :ARG2 (i / institution
      :mod (f / financial)))

# ::id bank.1
(d / define-01
   :ARG1 (b / bank)
   :ARG2 (l / land
      :location (r / river)))
)";

// Four instances, two :mod siblings.
inline constexpr const char* kAppleDoc = R"(# ::id apple.0
# ::snt apple is defined as a red round fruit
(d / define-01
   :ARG1 (a / apple)
   :ARG2 (f / fruit
      :mod (r / red)
      :mod (r2 / round)))
)";

// Re-entrancy (s mentioned twice), an inverse role on a re-entrant
// variable, and an attribute constant.
inline constexpr const char* kLakeDoc = R"(# ::id lake.0
# ::snt a lake is still water in a basin
(d / define-01
   :ARG1 (l / lake)
   :ARG2 (w / water
      :mod (s / still)
      :location (b / basin
         :mod s
         :poss-of w
         :quant 3)))
)";

}  // namespace groundkit::testing
