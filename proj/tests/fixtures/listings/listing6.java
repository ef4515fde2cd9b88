class MenuInitializer {
  JMenuItem menuItem;
  JButton button;
  MenuListener listener = new MenuListener();

  void initInteractiveObjects() {
    menuItem = new JMenuItem();
    menuItem.setActionCommand("Copy");
    menuItem.addActionListener(listener);

    button = new JButton();
    button.setActionCommand("Cut");
    button.addActionListener(listener);
  }
}
