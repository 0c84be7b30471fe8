#pragma once

// The DrawText Creative prompt corpus, embedded verbatim. The same text
// ships as data/drawtext_creative_prompts.txt; both copies must hash to
// kCreativeCorpusSha256 (see prompts.hpp, which enforces this on load).
//
// Lines 1-10 target one letter, 11-60 one word, 61-85 two words, and
// 86-175 three or more words of rendered text.

namespace spellbench::detail {

inline constexpr char kCreativeCorpusSha256[] = "106d08054aa93c3b93bd03856d74d99f9f7616eb2e44dacf5804fe4a7091b628";

inline constexpr char kCreativeCorpusText[] = R"SBCORPUS(Studio shot of book shelf in the shape of letter G, museum quality, white background.
letter "c" made from cactus, high quality photo
Spirograph shape letter M, rainbow lines, white background.
Closeup shot of light magenta, blue and paint brushstrokes of very wide translucent overlapping plastic in the shape of letter F, over white background.
The lowercase letter "b" made out of fire.
Slopy minimal continued line pencil hand drawing of letter Z, white background.
a tower with a huge "w" on the side, from the perspective of a person standing at the base of the tower
3-d letter R made from thin lines connected with dots, white background.
Muted pastel magenta colored paint swirled in white paint in the shape of letter X, globular paint in liquid.
Minimal sculpture of letter W made from light metallic iridescent chrome thin wire, 3-D render, isometric perspective, ultra-detailed, dark background.
Drops of pastel rainbow colored paint exploding under water in letters "color" shape, pastel rainbow gradient background
3-d Letters "DILL" made from dill, studio shot, green background, centered on a page
Word "coffee" made from coffee beans, studio shot.
studio shot multicolored fur in the shape of word "hello", in a furry frame, white background, centered
Wide lens shot, chunky, organic, colorful, letters "colorful" made from many furry spheres of different sizes, 3-d rendering, centered, studio shot, middle of square canvas
A logo for the company EcoGrow, where the letters look like plants.
a green-colored luxury car with a "green" sticker in the back window
A blackboard with the word "multiplication" written in flowing cursive.
beautiful isometric word "DRAW" entirely made of pencils, soft smooth lighting, pastel colors,  trending on polycount, modular constructivism, blue background, physically based rendering, centered.
transparent water drops exploding under water in the shape of word "water", under water
a drawing of a badger made of mushrooms, with the word "mushroom" written above in glowing letters
a 17th century french baroque painting of a huge female lion, with the word "meow" written in a speech bubble coming from her mouth
a fun and colorful illustration of a waterfall, with the word "waterfall" in the style of a children's book
Letters "VOLUME" fully made from rainbow smoke, black background, centered, sceensaver.
dslr, 3-d word "rainbow" with rainbow fur, white background
a painting of a field of daisies, with the word "danger" written on them in red spray paint
a bottle of hair gel with the label "flawless"
Topographical letters Contour made of a layered paper, muted pastel colors
a logo for the company "brainboost", where the letters look like a brain
a logo for the company "imagine", where the letters look like hands pointing up
A vintage postage stamp showing a painting of the Golden Gate Bridge and the text "California".
a plate of spicy food with the word "spicy" written in flowing cursive
a gold and black logo for the company "moneymoneymoney", which looks like dollar signs
A rendered 3D model of the word "Dependable" made out of granite.
a volcano erupting, with the text "magma" in red
a photo of a prison cell with a window and a view of the ocean, and the word "freedom" painted on the glass
a bowl of alphabet cereal, with the message "smackeroo" written in the bowl with the cereal letters
Studio shot of book shelf in the shape of letters READ, museum quality, white background.
Studio shot of sculpture of text "cheese" made from cheese, with cheese frame.
a landscape of the coyote point national wildlife refuge in arizona, with a coyote sitting on a rock, with the word "coyote" written in sunrise colors
A professional logo for the crypto trading platform "SaltMine".
The word "exquisite" written in modern calligraphy.
A bowl of tomato soup with pasta letters that read "Delicious".
intricate and highly detailed white paper cut out art of a word "SNOW", a storybook illustration, paper cut out, standing in a grotto, made out of white paper, loss of inner self, opening door, hides in the shadows of trees, lithograph, a painting of white silver
3-d letters "dessert" made from desserts, arranged on a plate, studio shot
studio shot of word "BEE" made from bees, white background, in a frame made from bees
The logo for Robotrax, with metallic letters arranged in the shape of a robot.
chunky, organic, colorful, letters "fuzzy" made from many furry spheres of different sizes, 3-d rendering, centered in the frame
photo of a dark cave with the word "crazy" carved into the wall, with a yellow light shining through the cave entrance
a pair of scissors pointing down, and a computer with the word "delete" on the screen
studio shot, word "wow" in script made from rainbow colored fur, in a furry frame, white background, centered
Word "broken" made from broken shattered black glass, centered.
a black and white photo of a saxophone with the word "jazz" written in flowing cursive
Muted pastel multi colored paint swirled in white paint in the shape of letters "swirl", globular paint in liquid
a logo for the company "quantum", where the "q" looks like a lightning bolt
dslr shot of a pair of black and red sneakers with the word "punk" written in white. the background is a dark blue
a logo for the company "diamonds", with a diamond in the shape of a heart
a logo for the company "birthdaypix", where the letters look like birthday candles
a fork with the word "salad" engraved on it in a calligraphic font
3-d word "bricks" with brick texture made from real bricks
Photo of a robot lecturer writing the words "Representation Learning" in cursive on a blackboard, with math formulas and diagrams.
a sign that reads "no dogs" but with a dog smiling and wagging its tail
a globe with the text "planet earth" in bold letters, with the continents in bright colors
a photo of a sea of roses all around, and a sign in the distance that says "danger: minefield"
giraffe toothbrush made from wood, with the words "giraffe" and "toothbrush" in rainbow color
An airplane flying over a city, with the message "Support Skywriters" written in smoke trails.
A photo of a panda giving a presentation in a large conference room, with text ‘Diffusion Models', in the style of van Gogh
Two llamas dancing the mambo, pointing to a sign that says "Llama Mambo".
A hand painted wooden "Pineapple Club" sign in the shape of a pineapple, hanging outside a bar.
a logo for the company "ethereal media", where the letters look like a painting being created
The cover for the album 'Elusive Interludes' by the band The Melting Snowmen.
A Scrabble board showing the words "optimize" and "pattern".
flowers in a beautiful garden with a text "peace" made by the flowers, with a text "tensions" on the clouds in the sky
a detailed drawing, of words "Vintage lettering", letterism, heavy-gauge filigree, inhabited initials, medium: black pencil, revolver, ecopunk rococo, photo taken of an epic intricate, centered
Bananas arranged on a picnic table to form the message "That's bananas!"
An antique bottle labeled "Energy Tonic".
photo of a helicopter with the text "helicopter tours" on the side landing on a helipad in a valley with a river, trees, and mountains in the background
photo of a sign with "one way"
a sculpture of a brain made from wire and paper, with the words "deep thoughts" written into the material of the brain
a logo for a grocery store chain with the name "grocery land", with the g and the y are made of fruits and vegetables
studio shot of sculpture of text "unlock creativity" made from colorful thin wires
studio shot of a sculpture of a pair of shoes made of colorful wires and the text "unlock creativity"
a vintage image of the las vegas strip with the text "las vegas" in bold block letters
A robot writing "Ethics 101" in chalk on a blackboard.
a yellow saxophone in a rainbow-colored mist with the words "funky mist" that looks like musical clouds of smoke
studio close-up shot of an antique book with 'knowledge is power' painted in gold on the cover in thick flowing brushed calligraphy
portrait of a parrot is holding a sign with text "no parrots were harmed in the making of this presentation"
words "Struck by Lightning Twice." made from lightning
a photograph of a field of dandelions with the text "dandelions are the first to go when the lawn is mowed"
a composition of the taj mahal in the center of a gold leaf mandala, with the words "place of honor" centered at the bottom
A poster titled "Quails of North America", showing different kinds of quails.
a cartoon of a cat with a thought bubble saying "this is so weird"
a parrot on a pirate ship, with a parrot wearing a pirate hat, and the caption "i'm the captain now"
Generative art of words "Time is temporary, everything is temporary", viscous smoke made from dots, rivers, graph design, white background.
Studio shot of words "the food is terrible and the portions are too small" made from hotdogs, museum quality, framed photo, white background.
a picture of a powerful-looking vehicle that looks like it was designed to go off-road, with a text saying "i'm a truck, not a car"
a minimalistic version of a forest with a sign saying "help the forest" in the foreground
a map of the world with the text "the world is your oyster" in the middle
cartoon of a dog in a chef's hat, with a thought bubble saying "i can't remember anything!"
A retro coffee ad with the text 'Coffee is what i like'.
different colored shapes on a surface in the shape of words "Life is like a rainbow", an abstract sculpture, polycount, wrinkled, flowing realistic fabric, psytrance, cartography, smooth shading techniques, marble skin, old internet art, camouflage scheme, art », medium poly, smoothened
the view from one end of a bench in a park, looking at the sky, with the text "imagine the outcome" in the sky
a giant shoe, with the caption "shoe for hokey pokey"
A newspaper with the headline "Local pig eats prize pumpkin", and a photo showing the half-eaten pumpkin.
A storefront with "The world's best deli" written on it, centered
Grape vines in the shape of text 'open your mind' sprouting out of a head with flowers and butterflies. DSLR photo.
a plate with a single oyster, with a fork and knife sticking out of the oyster, with a caption that says "oysters for lunch"
dslr portrait of a robot is holding a sign with text "i am not a robot"
Studio shot of words "I like coffee because it gives me the illusion that I might be awake." made from coffee liquid, museum quality, white background.
A hastily handwritten note that says "I'll be back at 4:00" taped to a fridge.
A large recipe book titled "Recipes from Peru".
marquee billboard with "my fear of moving stairs is escalating"
shadow of a stone, taken from the point of view of an ant, with the caption "look at that shadow!"
a pumpkin with a mustache and a monocle and a top hat, with the text "you can get rich too" in a speech bubble
a cartoon of a dog holding a telescope looking at a star with a speech bubble saying "i wonder if there's a dog on that planet"
a blueprint of a house, with a triangle for the roof, a square for the walls, and a rectangle for the floor, and with the message "this house is built on the principles of abstraction"
a sunflower field with a tractor about to run over a sunflower, with the caption "after the sunflowers they will come for you"
text "balloons are flying" made from rainbow balloons, pastel background
the hubble telescope and the milky way, with the text "the universe is a mystery, but we are here to solve it"
a heart with the text "i love you", with the letters "love" made of rainbow colors
studio shot of beautiful textbook with title "how to be a manager of managers", white background
A decorative greeting card that reads "Congratulations on achieving state of the art!"
a painting of a cornfield with the words "feed the nation" in simple letters and colors
A sign that says "Please refrain from arguing with the chimpanzees".
a cartoon of a turtle with a thought bubble over its head with the words "what if there was no such thing as a thought bubble?"
"Fall is here" written in autumn leaves floating on a lake.
a crab sitting on a beach with a surfboard, the sun is a giant orange, and the sky is a rainbow, and the crab is thinking "you are all that matters"
the city of toronto as seen from an airplane, with a giant cn tower in the middle of the frame, with the text "the cn tower" in comic sans
a cartoon of a hippo with a speech bubble saying "i'm a hippo, what do you want?"
a lobster in a suit and tie, holding a microphone, with the caption "lobster says what?"
book with "surgery made easy"
art installation of a chair with the text "i got nothin" carved into the backrest
a painting of a landscape, with a handwritten note that says "this painting was not painted by me"
a picture of a bruised apple with the text "apples are good for you" in a fancy font
A photo of a corgi with a sign that says "I am not a real corgi".
Words "It takes AI and rain to make a rainbow" black background, holography, ((neon colors)), colorful swirly magical ripples, bruh moment, intricate white and gold neon, 3d cg, photorelistic.
a black and white logo on words "Every artist was first an amateur." a white background, a wireframe diagram, generative art, branches growing as hair, tropical reef, trademarks and symbols, in a forest, ios icon, composed of random limbs, stone carving, done in the style of matisse, realms, terminals
picture of two hands, one holding a heart, the other holding a lightning bolt, with the text "love is power"
beautiful photo of the alps, with the caption "the best mountains could do"
a pencil sketch of a tree with the title "nothing to tree here"
a dark forest with a single light in the distance, and the text "i've come to talk with you again"
a circle with the text "infinity makes me happy", in a font that looks like it was written by hand
studio shot of vines in the shape of text 'knowledge is power' sprouting, centered
a photo of a beautiful field of poppies with a sign that says "no photos please"
a grumpy sunflower with a "no solar panels" sign
A meme showing a cat attacking a shoe, with the message "I own your sole".
a test tube with a drop of liquid in it, with the text "we've found water on mars!"
a scene with a city in the background, and a single cloud in the foreground, with the text "contemplate the clouds" in rounded cursive
a picture of a dog and a cat with their heads poking out of a cage with a sign saying "no pets allowed"
a 3d model of a 1980s-style computer with the text "my old habit" on the screen
a mouse with a flashlight saying "i'm afraid of the dark"
A photo of a rabbit sipping coffee and reading a book. The book title "The Adventures of Peter Rabbit" is visible.
clown is holding a paper sign with "Even in hard times there's a possibility to have fun."
newspaper with the headline "aliens found in space" and the text "the truth about everything now challenged"
a dog with a speech bubble with the text "woof woof" and a translation speech bubble with the text "other dogs do vex us"
robot on a butter food processing line, with robot looking dejected, with an overhead red light indicating error, with robot saying "i can't believe it's not butter"
a graffiti art of the text "free the pink" on a wall
a lizard sitting on a baseball field home plate, with the words "made it safe" in a speech bubble
a picture of multiple trees at various stages of development, with the caption "growth is a continuous process"
a purple flower with a crown on its head and a speech bubble that says "i am the purple flower!"
a 1950s-style robot with a giant head and a body shaped like a rocket, with the caption "wow, a real spaceman!"
A professionally designed logo for a bakery called Just What I Kneaded.
Minimal sculpture of word "this is the future" made from light metallic iridescent chrome thin wire, 3-D render, isometric perspective, ultra-detailed, dark background.
pillow in the shape of words "ready for the weekend", letterism, funny jumbled letters, [ closeup ]!!, breads, author unknown, flat art, swedish, diaper-shaped, 2000, white clay, surreal object photography
plant in a fancy pot with a "do not touch" sign on it
a picture of the earth with the words "save the earth" in a circle
scholarly elephant reading a newspaper with the headline "elephants take over the world"
photo of a sign with "having a dog named shark at the beach was a mistake"
photo illustration of the earth being struck by multiple lightning strikes that merge, with the caption "astonishment at the speed of light"
a photo of a fish tank with a fish inside, with the text "tank you for visiting!"
the words "Art is never finished, only continued" in paint splatters on a white background, graffiti art, edge of nothingness love, muddy colors, colored woodcut, beautiful, spectral color
photo of a restaurant "the gas station"
A t-shirt with the message "There is no planet B" written on it.
a close up of a figurine of toothpaste tube, a 3D render, candy pastel, with text "brush your teeth" on the tube
A hand-drawn blueprint for a time machine, with the caption "Time Traveling Device".
)SBCORPUS";

}  // namespace spellbench::detail
